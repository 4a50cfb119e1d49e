"""Command line interface: ``shelfbraid <group> <command> ...``.

Braid words are whitespace-separated signed integers (quote them), terms are
``1`` or ``(T > T)``, extended braids are ``[<word> | p]`` and permutations
are one-line image lists such as ``2 3 1``.

Exit status: 0 success, 1 negative decision (not equal, not special, ...),
2 usage or parse error, 3 a work cap was exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass, field
from typing import Any, Callable, Sequence

from . import engine, laver, shelf, special
from .errors import ActionUndefined, BraidParseError, CapExceeded, NotDivisible, ShelfBraidError
from .extended import braid_distance, eb_distance, eb_equal, eb_mul, eb_shelf, parse_ext
from .quotients import (
    Perm,
    burau_of,
    burau_shelf_op,
    det,
    parse_perm,
    perm_class,
    perm_of,
    perm_shelf_op,
    shtr,
)
from .words import BraidWord, parse, render

EXIT_OK, EXIT_NO, EXIT_USAGE, EXIT_CAP = 0, 1, 2, 3


@dataclass
class Outcome:
    result: Any
    text: str
    certificates: dict = field(default_factory=dict)
    code: int = EXIT_OK


def _w(text: str) -> BraidWord:
    return parse(text)


def _wtext(w) -> str:
    # the unit braid renders as blank text, which parses back to the unit
    return render(engine.as_word(w))


def _colors(texts: Sequence[str] | None, width: int) -> tuple:
    if not texts:
        return shelf.unit_colors(width)
    return tuple(engine.Braid(_w(t)) for t in texts)


# -- braid ------------------------------------------------------------------


def braid_equal(a) -> Outcome:
    same = engine.equal(_w(a.w1), _w(a.w2))
    return Outcome(same, "equal" if same else "not equal", code=EXIT_OK if same else EXIT_NO)


def braid_classify(a) -> Outcome:
    c = engine.sigma_classify(_w(a.word), a.step_cap)
    reduced = engine.handle_reduce(_w(a.word), a.step_cap)
    return Outcome(
        {"sign": c.sign.value, "index": c.index},
        str(c),
        {"handle_free_word": render(reduced)},
    )


def braid_compare(a) -> Outcome:
    o = engine.compare(_w(a.w1), _w(a.w2), a.step_cap)
    sym = {engine.Order.LESS: "<", engine.Order.EQUAL: "=", engine.Order.GREATER: ">"}[o]
    return Outcome(o.name, f"{o.name} ({sym})")


def braid_reduce(a) -> Outcome:
    r = engine.handle_reduce(_w(a.word), a.step_cap)
    return Outcome(render(r), _wtext(r))


def braid_reverse(a) -> Outcome:
    u, v = engine.reverse_to_pos_neg(_w(a.word))
    return Outcome({"u": render(u), "v": render(v)}, f"u: {_wtext(u)}\nv: {_wtext(v)}")


def braid_fingerprint(a) -> Outcome:
    fp = engine.fingerprint(_w(a.word))
    images = [[int(x) for x in img] for img in fp.images]
    return Outcome(images, str(fp) if fp.images else "()")


# -- shelf ------------------------------------------------------------------


def shelf_op_cmd(a) -> Outcome:
    r = shelf.shelf_op(_w(a.b1), _w(a.b2))
    return Outcome(str(r), _wtext(r))


def shelf_opposite(a) -> Outcome:
    r = shelf.opposite_op(_w(a.b1), _w(a.b2))
    return Outcome(str(r), _wtext(r))


def shelf_power(a) -> Outcome:
    fn = shelf.left_power if a.left else shelf.right_power
    r = fn(_w(a.b), a.m)
    return Outcome(str(r), _wtext(r))


def shelf_divide(a) -> Outcome:
    try:
        x = shelf.left_divide(_w(a.b), _w(a.c))
    except NotDivisible:
        return Outcome(None, "not divisible", code=EXIT_NO)
    return Outcome(str(x), _wtext(x))


def shelf_member(a) -> Outcome:
    ok = shelf.in_Bn(_w(a.b), a.n)
    return Outcome(ok, f"in B_{a.n}" if ok else f"not in B_{a.n}", code=EXIT_OK if ok else EXIT_NO)


def shelf_act(a) -> Outcome:
    w = _w(a.word)
    colors = _colors(a.colors, w.width)
    try:
        out = shelf.act_partial(colors, w)
    except ActionUndefined as e:
        return Outcome(None, f"undefined at letter {e.position}", {"position": e.position}, EXIT_NO)
    return Outcome([str(c) for c in out], "\n".join(_wtext(c) for c in out))


# -- special ----------------------------------------------------------------


def special_check(a) -> Outcome:
    value = special.recognize_special(_w(a.word))
    if value is None:
        return Outcome(False, "not special", code=EXIT_NO)
    term = special.synthesize_term(value, a.size_cap)
    return Outcome(
        True,
        f"special\nvalue: {_wtext(value)}\nterm: {term}",
        {"value": str(value), "term": str(term)},
    )


def special_decompose(a) -> Outcome:
    dec = special.decompose(_w(a.word), a.n)
    neg = [str(b) for b in dec.negative]
    pos = [str(b) for b in dec.positive]
    text = "negative: " + ", ".join(_wtext(b) for b in dec.negative)
    text += "\npositive: " + ", ".join(_wtext(b) for b in dec.positive)
    return Outcome({"negative": neg, "positive": pos}, text)


def special_term(a) -> Outcome:
    if a.eval:
        t = special.parse_term(a.eval)
        b = special.eval_term(t)
        return Outcome(str(b), _wtext(b), {"term": str(t)})
    if a.word is None:
        raise BraidParseError("give a braid word or --eval TERM")
    w = _w(a.word)
    if not special.is_special(w):
        return Outcome(None, "not special", code=EXIT_NO)
    t = special.synthesize_term(w, a.size_cap)
    return Outcome(str(t), str(t))


def special_complexity(a) -> Outcome:
    w = _w(a.word)
    if not special.is_special(w):
        return Outcome(None, "not special", code=EXIT_NO)
    c = special.complexity(w, a.cap)
    return Outcome(c, str(c))


def special_simple(a) -> Outcome:
    rep = special.simple_decomposition(_w(a.word))
    if not rep.simple:
        return Outcome(False, "not simple", code=EXIT_NO)
    runs = list(rep.runs)
    return Outcome(True, "simple\nruns: " + " ".join(map(str, runs)), {"runs": runs})


def special_probe(a) -> Outcome:
    colors = _colors(a.colors, a.strands)
    rep = special.laver_conjecture_probe(colors, a.length)
    res = {
        "words_tried": rep.words_tried,
        "defined": rep.defined,
        "distinct": rep.distinct,
        "minimum": None if rep.minimum is None else str(rep.minimum),
        "all_positive_defined": rep.all_positive_defined,
    }
    text = "\n".join(f"{k}: {v}" for k, v in res.items())
    return Outcome(res, text)


# -- perm -------------------------------------------------------------------


def perm_op_cmd(a) -> Outcome:
    r = perm_shelf_op(parse_perm(a.f), parse_perm(a.g))
    return Outcome(list(r.images), r.one_line(1))


def perm_of_cmd(a) -> Outcome:
    r = perm_of(_w(a.word))
    return Outcome(list(r.images), r.one_line(1))


def perm_class_cmd(a) -> Outcome:
    f = perm_of(_w(a.word)) if a.word is not None else parse_perm(a.perm)
    c = perm_class(f)
    return Outcome(c, str(c))


def perm_table(a) -> Outcome:
    """Products f > g among the listed permutations (default id, s1, s2, s2 s3 s1)."""
    elems = [parse_perm(p) for p in a.perms] if a.perms else [
        Perm.from_word(ix) for ix in ((), (1,), (2,), (2, 3, 1))
    ]
    width = max([5] + [e.size for e in elems])
    rows = [[perm_shelf_op(f, g) for g in elems] for f in elems]
    width = max([width] + [r.size for row in rows for r in row])
    text = "\n".join(" | ".join(r.one_line(width) for r in row) for row in rows)
    return Outcome([[list(r.images) for r in row] for row in rows], text)


# -- burau ------------------------------------------------------------------


def burau_of_cmd(a) -> Outcome:
    m = burau_of(_w(a.word))
    return Outcome(m.to_json(), str(m))


def burau_op_cmd(a) -> Outcome:
    m = burau_shelf_op(burau_of(_w(a.w1)), burau_of(_w(a.w2)))
    return Outcome(m.to_json(), str(m))


def burau_det_cmd(a) -> Outcome:
    d = det(burau_of(_w(a.word)))
    return Outcome(str(d), str(d))


def burau_shtr_cmd(a) -> Outcome:
    s = shtr(burau_of(_w(a.word)))
    return Outcome(str(s), str(s))


# -- laver ------------------------------------------------------------------


def laver_table_cmd(a) -> Outcome:
    t = laver.laver_table(a.n)
    csv_text = t.to_csv()
    if a.output:
        with open(a.output, "w", encoding="utf-8") as fh:
            fh.write(csv_text)
        return Outcome(a.output, f"wrote {a.output}")
    return Outcome([list(r) for r in t.rows()], csv_text.rstrip("\n"))


def laver_period_cmd(a) -> Outcome:
    t = laver.laver_table(a.n)
    if a.x is not None:
        p = laver.row_period(t, a.x)
        return Outcome(p, str(p))
    ps = laver.row_periods(t)
    return Outcome(ps, " ".join(map(str, ps)))


def laver_project_cmd(a) -> Outcome:
    if a.n < 1:
        raise BraidParseError("projection needs n >= 1")
    t = laver.project(laver.laver_table(a.n))
    ok = t == laver.laver_table(a.n - 1)
    return Outcome(
        [list(r) for r in t.rows()],
        t.to_csv().rstrip("\n"),
        {"equals_smaller_table": ok},
        EXIT_OK if ok else EXIT_NO,
    )


def laver_check_cmd(a) -> Outcome:
    ok = laver.is_left_shelf(laver.build_cyclic(a.N))
    return Outcome(ok, "left shelf" if ok else "not a left shelf", code=EXIT_OK if ok else EXIT_NO)


# -- extended braids ----------------------------------------------------------


def eb_mul_cmd(a) -> Outcome:
    r = eb_mul(parse_ext(a.x), parse_ext(a.y))
    return Outcome(str(r), str(r))


def eb_op_cmd(a) -> Outcome:
    r = eb_shelf(parse_ext(a.x), parse_ext(a.y))
    return Outcome(str(r), str(r))


def eb_equal_cmd(a) -> Outcome:
    ok = eb_equal(parse_ext(a.x), parse_ext(a.y))
    return Outcome(ok, "equal" if ok else "not equal", code=EXIT_OK if ok else EXIT_NO)


def eb_distance_cmd(a) -> Outcome:
    if a.braids:
        d = braid_distance(_w(a.x), _w(a.y))
    else:
        d = eb_distance(parse_ext(a.x), parse_ext(a.y))
    return Outcome(str(d), str(d))


# -- reference examples ---------------------------------------------------------


def paper_examples(a) -> Outcome:
    from .reference_examples import run_all

    results, ok = run_all()
    lines = [f"{'PASS' if good else 'FAIL'}  {name}" for name, good in results]
    passed = sum(good for _, good in results)
    lines.append(f"{passed}/{len(results)} passed")
    return Outcome(
        [{"name": n, "pass": g} for n, g in results],
        "\n".join(lines),
        code=EXIT_OK if ok else EXIT_NO,
    )


# -- parser -----------------------------------------------------------------


def _common() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(add_help=False)
    p.add_argument("--json", action="store_true", default=argparse.SUPPRESS, help="emit JSON")
    p.add_argument(
        "--step-cap",
        type=int,
        default=argparse.SUPPRESS,
        help="handle reduction step cap (default 1000000)",
    )
    p.add_argument(
        "--size-cap",
        type=int,
        default=argparse.SUPPRESS,
        help="largest term size searched when synthesising terms (default 12)",
    )
    return p


def build_parser() -> argparse.ArgumentParser:
    common = _common()
    parser = argparse.ArgumentParser(
        prog="shelfbraid",
        description="Exact computations in the braid shelf and related shelves.",
        parents=[common],
    )
    groups = parser.add_subparsers(dest="group", required=True)

    def group(name: str, help_text: str):
        g = groups.add_parser(name, help=help_text, parents=[common])
        return g.add_subparsers(dest="command", required=True)

    def cmd(sub, name: str, fn: Callable, help_text: str, *args: tuple):
        p = sub.add_parser(name, help=help_text, parents=[common])
        for a in args:
            names, kw = a
            p.add_argument(*names, **kw)
        p.set_defaults(fn=fn, op=f"{p.prog.split(' ', 1)[1]}")
        return p

    W = lambda name, h="braid word": ((name,), {"help": h})  # noqa: E731
    I = lambda name, h: ((name,), {"type": int, "help": h})  # noqa: E731

    b = group("braid", "word problem, order, reversing")
    cmd(b, "equal", braid_equal, "decide equality", W("w1"), W("w2"))
    cmd(b, "classify", braid_classify, "sigma-positive / negative / trivial", W("word"))
    cmd(b, "compare", braid_compare, "compare in the braid order", W("w1"), W("w2"))
    cmd(b, "reduce", braid_reduce, "handle reduction", W("word"))
    cmd(b, "reverse", braid_reverse, "right reversing to u v^-1", W("word"))
    cmd(b, "fingerprint", braid_fingerprint, "Artin action images", W("word"))

    s = group("shelf", "the braid shelf operation")
    cmd(s, "op", shelf_op_cmd, "b1 > b2", W("b1"), W("b2"))
    cmd(s, "opposite", shelf_opposite, "b1 < b2", W("b1"), W("b2"))
    cmd(
        s,
        "power",
        shelf_power,
        "right power (or --left)",
        W("b"),
        I("m", "exponent"),
        (("--left",), {"action": "store_true", "help": "left power"}),
    )
    cmd(s, "divide", shelf_divide, "x with b > x = c", W("b"), W("c"))
    cmd(s, "member", shelf_member, "decide b in B_n", W("b"), I("n", "strand count"))
    cmd(
        s,
        "act",
        shelf_act,
        "colour a word (default colours all 1)",
        W("word"),
        (("--colors",), {"nargs": "*", "help": "colour braids, one word each"}),
    )

    sp = group("special", "special braids")
    cmd(sp, "check", special_check, "recognise and give a term", W("word"))
    cmd(
        sp,
        "decompose",
        special_decompose,
        "special decomposition",
        W("word"),
        (("-n",), {"type": int, "default": None, "help": "sequence length"}),
    )
    cmd(
        sp,
        "term",
        special_term,
        "synthesise a term for a word, or evaluate one with --eval",
        (("word",), {"nargs": "?", "default": None, "help": "braid word"}),
        (("--eval",), {"default": None, "help": "term to evaluate"}),
    )
    cmd(
        sp,
        "complexity",
        special_complexity,
        "least term depth",
        W("word"),
        (("--cap",), {"type": int, "default": 4, "help": "largest depth searched"}),
    )
    cmd(sp, "simple", special_simple, "decide whether a braid is simple", W("word"))
    cmd(
        sp,
        "probe-laver",
        special_probe,
        "braids of bounded length acting on a colour sequence",
        I("length", "largest word length"),
        (("--strands",), {"type": int, "default": 2, "help": "colour sequence length"}),
        (("--colors",), {"nargs": "*", "help": "colour braids (default all 1)"}),
    )

    p = group("perm", "the permutation shelf")
    cmd(p, "op", perm_op_cmd, "f > g", W("f", "one-line images"), W("g", "one-line images"))
    cmd(p, "of", perm_of_cmd, "permutation of a braid word", W("word"))
    pc = cmd(
        p,
        "class",
        perm_class_cmd,
        "cl(f) = f^-1(1)",
        (("perm",), {"nargs": "?", "default": "", "help": "one-line images"}),
        (("--word",), {"default": None, "help": "take the permutation of this braid word"}),
    )
    del pc
    cmd(
        p,
        "table",
        perm_table,
        "table of products",
        (("perms",), {"nargs": "*", "help": "one-line images"}),
    )

    bu = group("burau", "the Burau shelf")
    cmd(bu, "of", burau_of_cmd, "Burau matrix of a word", W("word"))
    cmd(bu, "op", burau_op_cmd, "A > B for the matrices of two words", W("w1"), W("w2"))
    cmd(bu, "det", burau_det_cmd, "determinant", W("word"))
    cmd(bu, "shtr", burau_shtr_cmd, "shifted trace", W("word"))

    lv = group("laver", "Laver tables")
    cmd(
        lv,
        "table",
        laver_table_cmd,
        "CSV of A_n",
        I("n", "table index, size 2^n"),
        (("--output", "-o"), {"default": None, "help": "write CSV to this file"}),
    )
    cmd(
        lv,
        "period",
        laver_period_cmd,
        "row periods of A_n",
        I("n", "table index"),
        (("x",), {"type": int, "nargs": "?", "default": None, "help": "row (default all)"}),
    )
    cmd(lv, "project", laver_project_cmd, "reduce A_n modulo 2^(n-1)", I("n", "table index"))
    cmd(lv, "check", laver_check_cmd, "is the cyclic table on N elements a shelf", I("N", "size"))

    e = group("eb", "extended braids [word | p]")
    cmd(e, "mul", eb_mul_cmd, "product", W("x", "extended braid"), W("y", "extended braid"))
    cmd(e, "op", eb_op_cmd, "shelf operation", W("x", "extended braid"), W("y", "extended braid"))
    cmd(e, "equal", eb_equal_cmd, "class equality", W("x", "extended braid"), W("y", "extended braid"))
    cmd(
        e,
        "distance",
        eb_distance_cmd,
        "ultrametric distance",
        W("x", "extended braid"),
        W("y", "extended braid"),
        (("--braids",), {"action": "store_true", "help": "arguments are plain braid words"}),
    )

    pe = groups.add_parser("paper-examples", help="run the worked examples", parents=[common])
    pe.set_defaults(fn=paper_examples, op="paper-examples")
    return parser


def _inputs(args: argparse.Namespace) -> list:
    skip = {"fn", "op", "group", "command", "json", "step_cap", "size_cap"}
    return [v for k, v in vars(args).items() if k not in skip]


def run(argv: Sequence[str] | None = None, out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return int(e.code) if e.code is not None else EXIT_OK
    args.json = getattr(args, "json", False)
    args.step_cap = getattr(args, "step_cap", engine.HANDLE_STEP_CAP)
    args.size_cap = getattr(args, "size_cap", 12)
    try:
        outcome = args.fn(args)
    except CapExceeded as e:
        print(f"cap exceeded: {e}", file=err)
        return EXIT_CAP
    except (BraidParseError, ValueError) as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    except ShelfBraidError as e:
        print(f"error: {e}", file=err)
        return EXIT_USAGE
    if args.json:
        doc = {
            "op": args.op,
            "inputs": _inputs(args),
            "result": outcome.result,
            "certificates": outcome.certificates,
        }
        print(json.dumps(doc, sort_keys=False), file=out)
    else:
        print(outcome.text, file=out)
    return outcome.code


def main() -> None:
    sys.exit(run())


if __name__ == "__main__":
    main()

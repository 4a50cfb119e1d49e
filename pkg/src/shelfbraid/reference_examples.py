"""Worked values from the source text, each as a named zero-argument check.

``shelfbraid paper-examples`` runs them in order and prints one line per
check, so its transcript is stable and kept as a golden file.
"""

from __future__ import annotations

from typing import Callable

from . import laver
from .engine import Braid, equal, reverse_to_pos_neg
from .errors import ActionUndefined, NotDivisible
from .extended import TAU, ExtBraid, eb_equal, eb_mul, eb_shelf
from .quotients import (
    IDENTITY_BURAU,
    Perm,
    burau_left_power,
    burau_shelf_op,
    burau_sigma,
    det,
    perm_left_power,
    perm_shelf_op,
    shtr,
    small_class_quotient,
)
from .quotients.laurent import T, LaurentPoly
from .shelf import (
    act_partial,
    act_positive,
    in_Bn,
    left_divide,
    left_power,
    right_power,
    shelf_op,
    shifted_product,
    unit_colors,
)
from .special import (
    Node,
    LEAF,
    decompose,
    decompose_positive,
    eval_term,
    is_simple,
    positive_special_length,
    recognize_special,
    synthesize_term,
)
from .words import BraidWord, parse, tau_word

Check = Callable[[], bool]


def _b(text: str) -> Braid:
    return Braid(parse(text))


def _s(*indices: int) -> Perm:
    return Perm.from_word(indices)


def _colors_equal(got, want) -> bool:
    return len(got) == len(want) and all(g == _b(w) for g, w in zip(got, want))


def _perm_products() -> bool:
    elems = [_s(), _s(1), _s(2), _s(2, 3, 1)]
    expected = [
        [_s(1), _s(2, 1), _s(3, 1), _s(3, 4, 2, 1)],
        [_s(2), _s(2, 1), _s(3, 2), _s(3, 4, 2, 1)],
        [_s(2, 3, 1), _s(3, 1), _s(2, 1), _s(3, 4, 2, 3, 4, 1)],
        [_s(3, 4, 2, 3, 4), _s(3, 4, 2, 3, 4, 1), _s(4, 3), _s(3, 1)],
    ]
    return all(
        perm_shelf_op(f, g) == expected[i][j]
        for i, f in enumerate(elems)
        for j, g in enumerate(elems)
    )


def _undefined_unit_division() -> bool:
    try:
        act_partial(unit_colors(2), parse("-1"))
    except ActionUndefined as e:
        return e.position == 1
    return False


def _not_divisible() -> bool:
    try:
        left_divide(_b(""), _b(""))
    except NotDivisible:
        return True
    return False


def _reversing_and_recognition() -> bool:
    w = parse("-2 -1 2 2 1")
    u, v = reverse_to_pos_neg(w)
    value = recognize_special(w)
    return u == parse("1 1") and v == parse("2") and value is not None and value == left_power(_b(""), 3)


def _decomposition_of_mixed_word() -> bool:
    dec = decompose(parse("-1 -1 2 1"), 3)
    return (
        dec.reassemble() == _b("-1 -1 2 1")
        and _colors_equal(decompose_positive(parse("1 1"), 3), ["1 1 -2", "1", ""])
        and _colors_equal(decompose_positive(parse("2 1"), 3), ["2 1", "", ""])
    )


_A2_ROWS = [(2, 4, 2, 4), (3, 4, 3, 4), (4, 4, 4, 4), (1, 2, 3, 4)]
_A3_ROWS = [
    (2, 4, 6, 8, 2, 4, 6, 8),
    (3, 4, 7, 8, 3, 4, 7, 8),
    (4, 8, 4, 8, 4, 8, 4, 8),
    (5, 6, 7, 8, 5, 6, 7, 8),
    (6, 8, 6, 8, 6, 8, 6, 8),
    (7, 8, 7, 8, 7, 8, 7, 8),
    (8, 8, 8, 8, 8, 8, 8, 8),
    (1, 2, 3, 4, 5, 6, 7, 8),
]


def _laver_tables() -> bool:
    return (
        laver.build_cyclic(1).rows() == [(1,)]
        and laver.build_cyclic(2).rows() == [(2, 2), (1, 2)]
        and laver.build_cyclic(4).rows() == _A2_ROWS
        and laver.build_cyclic(8).rows() == _A3_ROWS
    )


def _small_class_table() -> bool:
    a1 = laver.build_cyclic(2)
    # class c corresponds to the element c of the two-element table
    return all(small_class_quotient(c1, c2) == a1.entry(c1, c2) for c1 in (1, 2) for c2 in (1, 2))


EXAMPLES: list[tuple[str, Check]] = [
    ("shelf: 1 > 1 = s1", lambda: shelf_op(_b(""), _b("")) == _b("1")),
    ("shelf: 1 > s1 = s2 s1", lambda: shelf_op(_b(""), _b("1")) == _b("2 1")),
    ("shelf: s1 > 1 = s1^2 s2^-1", lambda: shelf_op(_b("1"), _b("")) == _b("1 1 -2")),
    (
        "shelf: 1^[m] = s_(m-1) ... s1 for m <= 8",
        lambda: all(
            right_power(_b(""), m) == Braid(BraidWord(tuple(range(m - 1, 0, -1)))) for m in range(1, 9)
        ),
    ),
    ("shelf: 1_[3] = s1^2 s2^-1", lambda: left_power(_b(""), 3) == _b("1 1 -2")),
    ("shelf: relations hold", lambda: equal("1 2 1", "2 1 2") and equal("1 3", "3 1")),
    ("shelf: 1 > x = 1 has no solution", _not_divisible),
    ("shelf: left division 1 \\ s2 s1 = s1", lambda: left_divide(_b(""), _b("2 1")) == _b("1")),
    (
        "membership: s1 in B2, s2 not in B2, s2 in B3",
        lambda: in_Bn(_b("1"), 2) and not in_Bn(_b("2"), 2) and in_Bn(_b("2"), 3),
    ),
    (
        "colouring: (1,1,1) . s1^2 = (s1^2 s2^-1, s1, 1)",
        lambda: _colors_equal(act_positive(unit_colors(3), parse("1 1")), ["1 1 -2", "1", ""]),
    ),
    (
        "colouring: (1,1,1) . s2 s1 = (s2 s1, 1, 1)",
        lambda: _colors_equal(act_positive(unit_colors(3), parse("2 1")), ["2 1", "", ""]),
    ),
    ("colouring: (1,1) . s1^-1 undefined at letter 1", _undefined_unit_division),
    (
        "shifted product (s1^2 s2^-1, s1, 1) = s1^2",
        lambda: shifted_product([_b("1 1 -2"), _b("1"), _b("")]) == _b("1 1"),
    ),
    ("special: decomposition of s1^-2 s2 s1", _decomposition_of_mixed_word),
    ("special: reversing and recognition of s2^-1 s1^-1 s2^2 s1", _reversing_and_recognition),
    ("special: s2 is not special", lambda: recognize_special(parse("2")) is None),
    ("special: eval (1 > 1) = s1", lambda: eval_term(Node(LEAF, LEAF)) == _b("1")),
    ("special: term of s3 s2 s1 is the right comb", lambda: str(synthesize_term(parse("3 2 1"))) == "(1 > (1 > (1 > 1)))"),
    ("special: positive special length of s3 s2 s1 is 3", lambda: positive_special_length(parse("3 2 1")) == 3),
    ("simple: Delta_3 is simple, s1^2 is not", lambda: is_simple(parse("2 1 2")) and not is_simple(parse("1 1"))),
    ("simple: witness s1^2 s2^-1 not in B2", lambda: not in_Bn(_b("1 1 -2"), 2)),
    ("perm: products among id, s1, s2, s2 s3 s1", _perm_products),
    (
        "perm: left powers of id",
        lambda: [perm_left_power(_s(), m) for m in range(2, 6)] == [_s(1), _s(2), _s(2, 3, 1), _s(3, 4, 2, 3, 4)],
    ),
    (
        "perm: s2 s1 = ((s2 s1) > s1) > s2 s3 s1",
        lambda: perm_shelf_op(perm_shelf_op(_s(2, 1), _s(1)), _s(2, 3, 1)) == _s(2, 1),
    ),
    (
        "perm: id > id_[3] = s3 s1 = id_[3] > id_[2]",
        lambda: perm_shelf_op(_s(), _s(2)) == _s(3, 1) == perm_shelf_op(_s(2), _s(1)),
    ),
    ("perm: class quotient is the two-element table", _small_class_table),
    ("burau: det(Sigma_1) = -t", lambda: det(burau_sigma(1)) == LaurentPoly.monomial(-1, 1)),
    ("burau: shtr(Sigma_1) = t", lambda: shtr(burau_sigma(1)) == T),
    (
        "burau: I > I_[3] != I_[3] > I_[2]",
        lambda: burau_shelf_op(IDENTITY_BURAU, burau_left_power(IDENTITY_BURAU, 3))
        != burau_shelf_op(burau_left_power(IDENTITY_BURAU, 3), burau_left_power(IDENTITY_BURAU, 2)),
    ),
    ("laver: tables A0 to A3", _laver_tables),
    (
        "laver: A2 gives 1 > 3 = 2 and 3 > 2 = 4",
        lambda: laver.build_cyclic(4).entry(1, 3) == 2 and laver.build_cyclic(4).entry(3, 2) == 4,
    ),
    ("laver: A3 projects onto A2", lambda: laver.project(laver.build_cyclic(8)) == laver.build_cyclic(4)),
    (
        "laver: shelf exactly for N a power of 2, N <= 33",
        lambda: [n for n in range(1, 34) if laver.is_left_shelf(laver.build_cyclic(n))] == [1, 2, 4, 8, 16, 32],
    ),
    ("extended: tau_(p,0) = 1", lambda: all(tau_word(p, 0) == BraidWord() for p in range(5))),
    ("extended: s1 tau^2 = tau^2", lambda: eb_equal(eb_mul(ExtBraid(_b("1"), 0), eb_mul(TAU, TAU)), eb_mul(TAU, TAU))),
    (
        "extended: s_i tau = tau s_(i-1)",
        lambda: all(
            eb_equal(eb_mul(ExtBraid(_b(str(i)), 0), TAU), eb_mul(TAU, ExtBraid(_b(str(i - 1)), 0)))
            for i in range(2, 6)
        ),
    ),
    (
        "extended: layer 1 is the braid shelf",
        lambda: eb_equal(
            eb_shelf(ExtBraid(_b("1 -2"), 1), ExtBraid(_b("2"), 1)),
            ExtBraid(shelf_op(_b("1 -2"), _b("2")), 1),
        ),
    ),
    (
        "extended: layer 0 is conjugation",
        lambda: eb_equal(eb_shelf(ExtBraid(_b("1"), 0), ExtBraid(_b("2"), 0)), ExtBraid(_b("1 2 -1"), 0)),
    ),
]


def run_all() -> tuple[list[tuple[str, bool]], bool]:
    results = []
    for name, check in EXAMPLES:
        try:
            ok = bool(check())
        except Exception:  # noqa: BLE001 - any failure is a failed example
            ok = False
        results.append((name, ok))
    return results, all(ok for _, ok in results)

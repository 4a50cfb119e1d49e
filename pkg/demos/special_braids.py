"""Special braids: the braids reachable from the unit by the shelf operation."""

from shelfbraid import ONE, Braid, decompose, eval_term, parse_term, recognize_special, shelf_op, synthesize_term
from shelfbraid.special import complexity, is_simple, specials_by_size
from shelfbraid.words import parse, render

x = shelf_op(ONE, ONE)
print("1 > 1 =", render(x.word))
print("(1 > 1) > 1 =", render(shelf_op(x, ONE).word))

t = parse_term("(1 > ((1 > 1) > 1))")
b = eval_term(t)
print(f"{t} evaluates to [{render(b.word)}]")
print("recognised back:", recognize_special(b.word) == b, "term found:", synthesize_term(b))

for w in ["-2 -1 2 2 1", "2", "1 1 -2"]:
    value = recognize_special(parse(w))
    print(f"[{w}] special? {'yes, ' + render(value.word) if value is not None else 'no'}")

dec = decompose(parse("-1 -1 2 1"))
print("negative part:", [render(e.word) for e in dec.negative])
print("positive part:", [render(e.word) for e in dec.positive])
print("reassembles:", dec.reassemble() == Braid(parse("-1 -1 2 1")))

print("distinct specials with terms of <= 6 leaves:", len(specials_by_size(6)))
print("complexity of s2 s1:", complexity(parse("2 1")))
print("Delta_3 simple?", is_simple(parse("1 2 1")), " s1^2 simple?", is_simple(parse("1 1")))

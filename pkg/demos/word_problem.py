"""Deciding equality and order of braids.

Two words for the same braid, a handle reduction, the sign of a quotient and
the reversing of a mixed word into a fraction.
"""

from shelfbraid import compare, equal, handle_reduce, reverse_to_pos_neg, sigma_classify
from shelfbraid.words import parse, render

a, b = parse("1 2 1"), parse("2 1 2")
print("s1 s2 s1 == s2 s1 s2 ?", equal(a, b))
print("s1 s2 == s2 s1 ?", equal("1 2", "2 1"))

w = parse("1 2 -1 -2 1")
print(f"handle reduction of [{render(w)}] -> [{render(handle_reduce(w))}]")
print("its class:", sigma_classify(w))

print("compare s2 with s1:", compare("2", "1").name)
print("compare s1 with s2^5:", compare("1", "2 2 2 2 2").name)

u, v = reverse_to_pos_neg(parse("-2 -1 2 2 1"))
print(f"s2^-1 s1^-1 s2^2 s1 = ({render(u)}) ({render(v)})^-1")

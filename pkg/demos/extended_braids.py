"""Extended braids [beta | p] and the two operations on them."""

from shelfbraid.extended import TAU, ExtBraid, braid_distance, eb_distance, eb_equal, eb_mul, eb_shelf, parse_ext
from shelfbraid.words import parse

s1 = parse_ext("[1 | 0]")
print("s1 tau^2 == tau^2 ?", eb_equal(eb_mul(s1, eb_mul(TAU, TAU)), eb_mul(TAU, TAU)))
for i in range(2, 5):
    lhs = eb_mul(parse_ext(f"[{i} | 0]"), TAU)
    rhs = eb_mul(TAU, parse_ext(f"[{i - 1} | 0]"))
    print(f"s{i} tau == tau s{i - 1} ?", eb_equal(lhs, rhs))

x, y = parse_ext("[1 -2 | 1]"), parse_ext("[2 | 1]")
print(x, ">", y, "=", eb_shelf(x, y))
print(parse_ext("[1 | 0]"), ">", parse_ext("[2 | 0]"), "=", eb_shelf(parse_ext("[1 | 0]"), parse_ext("[2 | 0]")))

print("d(s2, s3) =", braid_distance(parse("2"), parse("3")))
print("d([3 | 0], [4 | 0]) =", eb_distance(ExtBraid(parse("3"), 0), ExtBraid(parse("4"), 0)))

"""Extended braids [beta, p]: limits of beta . tau_(p,n) as n grows.

Braids carry the ultrametric d(b1, b2) = 2^-p, p the largest exponent with
b1^-1 b2 in the image of sh^p.  Its completion adds the classes [beta, p],
where (beta, p) and (gamma, q) are identified when p = q and
beta^-1 gamma lies in B_p.  On these classes

    [b, p] . [c, q] = [b sh^p(c), p + q]
    [b, p] > [c, q] = [b sh^p(c) tau_(p,q) sh^q(b)^-1, q]

give a monoid and a shelf; the layer [-, 0] is the group B_inf under
conjugation and [-, 1] is the braid shelf.
"""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction

from .engine import ONE, Braid, WordLike, as_word, is_trivial, shift_depth
from .errors import BraidParseError, EngineInconsistency
from .shelf import in_Bn
from .words import concat, free_cancel, invert, parse, render, shift_word, tau_word

_TEXT = re.compile(r"^\[\s*([^|\]]*)\|\s*(\d+)\s*\]$")


def braid_distance(w1: WordLike, w2: WordLike) -> Fraction:
    """0 for equal braids, else 2^-p with p maximal such that w1^-1 w2 is in Im(sh^p)."""
    q = free_cancel(concat(invert(as_word(w1)), as_word(w2)))
    p = shift_depth(q)
    if p is None:
        return Fraction(0)
    return Fraction(1, 2**p)


@dataclass(frozen=True)
class ExtBraid:
    """Representative (beta, p) of the class [beta, p].

    Field equality is representative equality; class equality is
    :func:`eb_equal`.
    """

    beta: Braid = ONE
    p: int = 0

    def __post_init__(self):
        if not isinstance(self.beta, Braid):
            object.__setattr__(self, "beta", Braid(as_word(self.beta)))
        if self.p < 0:
            raise ValueError("layer p must be nonnegative")

    def __str__(self) -> str:
        return f"[{render(self.beta.word)} | {self.p}]"

    def __mul__(self, other: "ExtBraid") -> "ExtBraid":
        return eb_mul(self, other)


EB_ONE = ExtBraid(ONE, 0)
TAU = ExtBraid(ONE, 1)


def parse_ext(text: str) -> ExtBraid:
    """Read ``[<braid word> | p]``; ``[ | 1]`` is tau."""
    m = _TEXT.match(text.strip())
    if not m:
        raise BraidParseError(f"not an extended braid: {text!r}")
    return ExtBraid(Braid(parse(m.group(1))), int(m.group(2)))


def eb_equal(x: ExtBraid, y: ExtBraid) -> bool:
    if x.p != y.p:
        return False
    quotient = free_cancel(concat(invert(x.beta.word), y.beta.word))
    if x.p <= 1:
        return is_trivial(quotient)
    return in_Bn(quotient, x.p)


def eb_mul(x: ExtBraid, y: ExtBraid) -> ExtBraid:
    word = free_cancel(concat(x.beta.word, shift_word(y.beta.word, x.p)))
    return ExtBraid(Braid(word), x.p + y.p)


def eb_shelf(x: ExtBraid, y: ExtBraid) -> ExtBraid:
    b, p = x.beta.word, x.p
    c, q = y.beta.word, y.p
    word = free_cancel(concat(b, shift_word(c, p), tau_word(p, q), invert(shift_word(b, q))))
    return ExtBraid(Braid(word), q)


def truncate(x: ExtBraid, n: int) -> Braid:
    """The braid beta . tau_(p,n) approximating [beta, p]."""
    return Braid(concat(x.beta.word, tau_word(x.p, n)))


def eb_distance(x: ExtBraid, y: ExtBraid) -> Fraction:
    """Limit of d(beta tau_(p,n), gamma tau_(q,n)).

    Equal classes are at distance 0.  Otherwise the sequence is evaluated at
    n0 and n0 + 1 with n0 = width(beta) + width(gamma) + p + q + 2 and the two
    values must agree.
    """
    if eb_equal(x, y):
        return Fraction(0)
    n0 = x.beta.width + y.beta.width + x.p + y.p + 2
    values = [braid_distance(truncate(x, n).word, truncate(y, n).word) for n in (n0, n0 + 1)]
    if values[0] != values[1]:
        raise EngineInconsistency(f"distance did not stabilise: {values}")
    return values[0]

"""Exact Laurent polynomials in Z[t, t^-1], stored as sparse exponent maps."""

from __future__ import annotations

import re
from dataclasses import dataclass
from typing import Mapping

_TERM = re.compile(r"^([+-]?\d+)\*t\^([+-]?\d+)$")


@dataclass(frozen=True, slots=True)
class LaurentPoly:
    """Sorted ``(exponent, coefficient)`` pairs with no zero coefficients."""

    terms: tuple[tuple[int, int], ...] = ()

    @classmethod
    def from_dict(cls, coeffs: Mapping[int, int]) -> "LaurentPoly":
        return cls(tuple(sorted((e, c) for e, c in coeffs.items() if c)))

    @classmethod
    def const(cls, c: int) -> "LaurentPoly":
        return cls(((0, c),)) if c else ZERO

    @classmethod
    def monomial(cls, c: int, e: int) -> "LaurentPoly":
        return cls(((e, c),)) if c else ZERO

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.terms)
        for e, c in other.terms:
            out[e] = out.get(e, 0) + c
        return LaurentPoly.from_dict(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly(tuple((e, -c) for e, c in self.terms))

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        return self + (-other)

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        if not self.terms or not other.terms:
            return ZERO
        out: dict[int, int] = {}
        for e1, c1 in self.terms:
            for e2, c2 in other.terms:
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return LaurentPoly.from_dict(out)

    def evaluate(self, t):
        return sum(c * t**e for e, c in self.terms)

    def is_unit(self) -> bool:
        """True for +-t^k, the units of Z[t, t^-1]."""
        return len(self.terms) == 1 and abs(self.terms[0][1]) == 1

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*t^{e}" for e, c in self.terms)

    def __repr__(self) -> str:
        return f"LaurentPoly({str(self)!r})"


ZERO = LaurentPoly()
ONE = LaurentPoly(((0, 1),))
T = LaurentPoly(((1, 1),))
T_INV = LaurentPoly(((-1, 1),))


def parse_laurent(text: str) -> LaurentPoly:
    """Inverse of ``str``: terms ``c*t^k`` joined by `` + ``; ``0`` is zero."""
    text = text.strip()
    if text == "0":
        return ZERO
    out: dict[int, int] = {}
    for chunk in text.split(" + "):
        m = _TERM.match(chunk.strip())
        if not m:
            raise ValueError(f"bad Laurent term: {chunk!r}")
        c, e = int(m.group(1)), int(m.group(2))
        out[e] = out.get(e, 0) + c
    return LaurentPoly.from_dict(out)

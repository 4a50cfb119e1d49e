"""The injection shelf on eventually shift-like injections of {1, 2, ...}.

Only injections with a finite prefix f(1..N) followed by a constant offset,
f(n) = n + d for n > N, are representable.  This class contains the shift
SH, the image of S_inf under the embedding f -> f . SH, and is closed under
the operation

    (f > g)(n) = f(g(f^-1(n)))   for n in Im f,   n otherwise.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .perm import Perm


@dataclass(frozen=True, slots=True)
class Injection:
    prefix: tuple[int, ...] = ()
    offset: int = 0

    def __post_init__(self):
        if self.offset < 0:
            raise ValueError("offset must be nonnegative")
        prefix = list(self.prefix)
        while prefix and prefix[-1] == len(prefix) + self.offset:
            prefix.pop()
        prefix = tuple(prefix)
        n, d = len(prefix), self.offset
        # the tail takes every value above n + d, so prefix values must stay
        # at or below it and be pairwise distinct
        if any(v < 1 or v > n + d for v in prefix) or len(set(prefix)) != n:
            raise ValueError(f"not an injection: prefix {prefix}, offset {d}")
        object.__setattr__(self, "prefix", prefix)

    @property
    def cutoff(self) -> int:
        return len(self.prefix)

    def __call__(self, n: int) -> int:
        if n < 1:
            raise ValueError("injections act on positive integers")
        return self.prefix[n - 1] if n <= len(self.prefix) else n + self.offset

    def preimage(self, n: int) -> int | None:
        """f^-1(n), or None when n is not in the image."""
        tail = n - self.offset
        if tail > self.cutoff:
            return tail
        try:
            return self.prefix.index(n) + 1
        except ValueError:
            return None

    def colm(self) -> tuple[int, ...]:
        """The complement of the image, always finite."""
        return tuple(n for n in range(1, self.cutoff + self.offset + 1) if self.preimage(n) is None)

    def __mul__(self, other: "Injection") -> "Injection":
        """Composite f . g, n -> f(g(n))."""
        m = self.cutoff + other.cutoff + 1
        return from_function(lambda n: self(other(n)), m, self.offset + other.offset)

    def __str__(self) -> str:
        return f"[{' '.join(map(str, self.prefix))} | +{self.offset}]"


def from_function(fn: Callable[[int], int], upto: int, offset: int) -> Injection:
    """Injection agreeing with fn on 1..upto and shifting by offset beyond."""
    return Injection(tuple(fn(n) for n in range(1, upto + 1)), offset)


IDENTITY_INJECTION = Injection()
SH = Injection((), 1)


def inj_shelf_op(f: Injection, g: Injection) -> Injection:
    def value(n: int) -> int:
        k = f.preimage(n)
        return n if k is None else f(g(k))

    # past f.cutoff + f.offset + g.cutoff everything is tail arithmetic: n -> n + g.offset
    m = f.cutoff + f.offset + g.cutoff + 1
    return from_function(value, m, g.offset)


def inj_embed(f: Perm) -> Injection:
    """phi(f) = f . SH, that is n -> f(n + 1)."""
    return from_function(lambda n: f(n + 1), max(f.size, 1), 1)

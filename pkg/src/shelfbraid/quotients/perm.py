"""The permutation shelf (S_inf, >).

A permutation moves finitely many positive integers and is stored by its
images of 1..N, trailing fixed points dropped.  Products compose right to
left, ``(f * g)(n) = f(g(n))``, which makes :func:`perm_of` a homomorphism
for words read left to right and a morphism of shelves from the braid shelf.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable

from ..engine import WordLike, as_word


def _trim(images: Iterable[int]) -> tuple[int, ...]:
    images = list(images)
    while images and images[-1] == len(images):
        images.pop()
    return tuple(images)


@dataclass(frozen=True, slots=True)
class Perm:
    """Finitely supported bijection of {1, 2, ...}."""

    images: tuple[int, ...] = ()

    def __post_init__(self):
        images = _trim(self.images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise ValueError(f"not a permutation of 1..{len(images)}: {images}")
        object.__setattr__(self, "images", images)

    @classmethod
    def transposition(cls, i: int) -> "Perm":
        """s_i, exchanging i and i+1."""
        if i < 1:
            raise ValueError("transposition index must be positive")
        images = list(range(1, i + 2))
        images[i - 1], images[i] = i + 1, i
        return cls(tuple(images))

    @classmethod
    def from_word(cls, indices: Iterable[int]) -> "Perm":
        """The product s_(i_1) s_(i_2) ... for the given indices."""
        out = IDENTITY
        for i in indices:
            out = out * cls.transposition(i)
        return out

    @property
    def size(self) -> int:
        return len(self.images)

    def __call__(self, n: int) -> int:
        return self.images[n - 1] if n <= len(self.images) else n

    def __mul__(self, other: "Perm") -> "Perm":
        n = max(self.size, other.size)
        return Perm(tuple(self(other(k)) for k in range(1, n + 1)))

    def inverse(self) -> "Perm":
        inv = [0] * self.size
        for k, v in enumerate(self.images, start=1):
            inv[v - 1] = k
        return Perm(tuple(inv))

    def preimage(self, n: int) -> int:
        if n > self.size:
            return n
        return self.images.index(n) + 1

    def one_line(self, n: int | None = None) -> str:
        n = self.size if n is None else max(n, self.size)
        return " ".join(str(self(k)) for k in range(1, n + 1))

    def __str__(self) -> str:
        return f"[{self.one_line()}]"


IDENTITY = Perm()


def parse_perm(text: str) -> Perm:
    """Read a one-line image list such as ``2 3 1`` (brackets optional)."""
    body = text.strip().strip("[]")
    return Perm(tuple(int(tok) for tok in body.split()))


def perm_shift(f: Perm) -> Perm:
    """sh(f)(1) = 1, sh(f)(n) = f(n-1) + 1."""
    if not f.images:
        return f
    return Perm((1,) + tuple(v + 1 for v in f.images))


def perm_shelf_op(f: Perm, g: Perm) -> Perm:
    """f > g = f . sh(g) . s_1 . sh(f)^-1."""
    return f * perm_shift(g) * S1 * perm_shift(f).inverse()


S1 = Perm.transposition(1)


def perm_of(w: WordLike) -> Perm:
    """Permutation of a braid word; each sigma_i^(+-1) contributes s_i."""
    return Perm.from_word(abs(a) for a in as_word(w).letters)


def perm_class(f: Perm) -> int:
    """cl(f) = f^-1(1)."""
    return f.preimage(1)


def braid_class(w: WordLike) -> int:
    return perm_class(perm_of(w))


_SMALL_TABLE = {(1, 1): 2, (1, 2): 2, (2, 1): 1, (2, 2): 2}


def small_class_quotient(c1: int, c2: int) -> int:
    """Class of f > g from the classes of f and g, when both are 1 or 2."""
    try:
        return _SMALL_TABLE[(c1, c2)]
    except KeyError:
        raise ValueError("only classes 1 and 2 form the two-element quotient") from None


def perm_right_power(f: Perm, m: int) -> Perm:
    if m < 1:
        raise ValueError("powers start at m = 1")
    out = f
    for _ in range(m - 1):
        out = perm_shelf_op(f, out)
    return out


def perm_left_power(f: Perm, m: int) -> Perm:
    if m < 1:
        raise ValueError("powers start at m = 1")
    out = f
    for _ in range(m - 1):
        out = perm_shelf_op(out, f)
    return out

"""Artin's action of braids on the free group F_inf.

Free-group words are tuples of nonzero ints, ``+i`` for x_i and ``-i`` for
its inverse, always kept freely reduced.  The action is

    sigma_i      : x_i -> x_i x_(i+1) x_i^-1,  x_(i+1) -> x_i
    sigma_i^-1   : x_i -> x_(i+1),             x_(i+1) -> x_(i+1)^-1 x_i x_(i+1)

and a word acts as the composite rho(a_1) o ... o rho(a_k).  Reading the word
left to right, the images of all generators are updated in place: if
``img[j]`` holds rho(prefix)(x_j), appending a letter only recombines
``img[i]`` and ``img[i+1]``.

The action is faithful, so the tuple of images is a complete invariant of the
braid; :func:`fingerprint` trims it to a representative-independent key.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CapExceeded
from .words import BraidWord

FreeWord = tuple[int, ...]

#: default bound on the length of any single free-group image
ELEMENT_CAP = 1_000_000


def fw_inverse(u: FreeWord) -> FreeWord:
    return tuple(-a for a in reversed(u))


def fw_reduce(u) -> FreeWord:
    stack: list[int] = []
    for a in u:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


def fw_mul(*parts: FreeWord) -> FreeWord:
    """Product of freely reduced words; only junctions need cancelling."""
    out: list[int] = []
    for p in parts:
        k = 0
        n = len(p)
        while k < n and out and out[-1] == -p[k]:
            out.pop()
            k += 1
        out.extend(p[k:] if k else p)
    return tuple(out)


def fw_str(u: FreeWord) -> str:
    if not u:
        return "1"
    return " ".join(f"x{a}" if a > 0 else f"x{-a}^-1" for a in u)


def artin_images(w: BraidWord, n: int | None = None, cap: int = ELEMENT_CAP) -> list[FreeWord]:
    """Images rho(w)(x_1), ..., rho(w)(x_n); n defaults to the width of w."""
    if n is None:
        n = w.width
    n = max(n, w.width)
    img: list[FreeWord] = [(j,) for j in range(1, n + 1)]
    for a in w.letters:
        i = abs(a) - 1
        u, v = img[i], img[i + 1]
        if a > 0:
            new = fw_mul(u, v, fw_inverse(u))
            img[i], img[i + 1] = new, u
        else:
            new = fw_mul(fw_inverse(v), u, v)
            img[i], img[i + 1] = v, new
        if len(new) > cap:
            raise CapExceeded(
                f"free-group image exceeded {cap} letters", reached=len(new)
            )
    return img


def artin_apply(w: BraidWord, i: int) -> FreeWord:
    """rho(w)(x_i) as a freely reduced word."""
    if i < 1:
        raise ValueError("generator index must be positive")
    if i > w.width:
        return (i,)
    return artin_images(w)[i - 1]


def acts_trivially(w: BraidWord, cap: int = ELEMENT_CAP) -> bool:
    """True iff rho(w) fixes every x_i, i.e. w represents the unit braid.

    The word is split at its midpoint as u * v^-1 and the two automorphisms
    rho(u), rho(v) are compared, which keeps intermediate images much shorter
    than running through the whole word.
    """
    letters = w.letters
    if not letters:
        return True
    n = w.width
    mid = len(letters) // 2
    left = BraidWord(letters[:mid])
    right = BraidWord(tuple(-a for a in reversed(letters[mid:])))
    return artin_images(left, n, cap) == artin_images(right, n, cap)


@dataclass(frozen=True, slots=True)
class Fingerprint:
    """Trimmed tuple of Artin images; equal exactly for equal braids."""

    images: tuple[FreeWord, ...]

    def __str__(self) -> str:
        return "(" + ", ".join(fw_str(u) for u in self.images) + ")"


def trim_images(images) -> tuple[FreeWord, ...]:
    images = list(images)
    while images and images[-1] == (len(images),):
        images.pop()
    return tuple(images)


def fingerprint(w: BraidWord, cap: int = ELEMENT_CAP) -> Fingerprint:
    return Fingerprint(trim_images(artin_images(w, cap=cap)))

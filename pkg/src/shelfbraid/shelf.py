"""The braid shelf (B_inf, >).

    b1 > b2 = b1 . sh(b2) . sigma_1 . sh(b1)^-1

is left selfdistributive.  This module provides the operation, its right
and left powers, left division, the B_n membership test by absorption, and
the (partial) action of braid words on sequences of braids by colouring.
"""

from __future__ import annotations

from typing import Sequence

from .engine import ONE, Braid, WordLike, as_word, shift_preimage
from .errors import ActionUndefined, EngineInconsistency, NotDivisible
from .hashkey import SIGMA1, key_product
from .words import BraidWord, concat, descending_run, free_cancel, invert, shift_word, sigma

ColorSeq = tuple[Braid, ...]

_S1 = sigma(1)
_S1_INV = sigma(1, -1)


def _braid(x) -> Braid:
    return x if isinstance(x, Braid) else Braid(as_word(x))


def shelf_op(b1: WordLike, b2: WordLike) -> Braid:
    """b1 > b2.

    >>> str(shelf_op("", ""))
    '1'
    >>> str(shelf_op("1", ""))
    '1 1 -2'
    """
    x, y = _braid(b1), _braid(b2)
    w1, w2 = x.word, y.word
    # the hash key composes, so long results never need re-hashing
    key = key_product(x.key, y.key, SIGMA1, x.key, shifts=(0, 1, 0, 1), inverted=(False, False, False, True))
    word = free_cancel(concat(w1, shift_word(w2, 1), _S1, invert(shift_word(w1, 1))))
    return Braid(word, key)


def opposite_op(b1: WordLike, b2: WordLike) -> Braid:
    """b1 < b2 = sh(b2)^-1 . sigma_1 . sh(b1) . b2, right selfdistributive."""
    w1, w2 = as_word(b1), as_word(b2)
    return Braid(free_cancel(concat(invert(shift_word(w2, 1)), _S1, shift_word(w1, 1), w2)))


def right_power(b: WordLike, m: int) -> Braid:
    """b^[m] = b > (b > ( ... > b))."""
    if m < 1:
        raise ValueError("powers start at m = 1")
    b = _braid(b)
    out = b
    for _ in range(m - 1):
        out = shelf_op(b, out)
    return out


def left_power(b: WordLike, m: int) -> Braid:
    """b_[m] = ((b > b) > ... ) > b."""
    if m < 1:
        raise ValueError("powers start at m = 1")
    b = _braid(b)
    out = b
    for _ in range(m - 1):
        out = shelf_op(out, b)
    return out


def unit_right_power(m: int) -> Braid:
    """1^[m], known in closed form as sigma_(m-1) ... sigma_1."""
    return Braid(descending_run(m - 1))


def is_left_divisible(b: WordLike, c: WordLike) -> bool:
    """True iff c = b > x for some x, i.e. b > c = b^[2] > c."""
    b, c = _braid(b), _braid(c)
    return shelf_op(b, c) == shelf_op(shelf_op(b, b), c)


def left_divide(b: WordLike, c: WordLike) -> Braid:
    """The unique x with b > x = c; raises :class:`NotDivisible` otherwise.

    Once divisibility is established the quotient is forced:
    b^-1 . c . sh(b) . sigma_1^-1 = sh(x).
    """
    b, c = _braid(b), _braid(c)
    if not is_left_divisible(b, c):
        raise NotDivisible(f"{c!r} is not in the image of left translation by {b!r}")
    delta = free_cancel(concat(invert(b.word), c.word, shift_word(b.word, 1), _S1_INV))
    x = shift_preimage(delta, 1)
    if x is None:
        raise EngineInconsistency(
            f"divisibility test passed but quotient {delta} is not a shift image"
        )
    return Braid(x)


def in_Bn(b: WordLike, n: int) -> bool:
    """Membership in B_n, decided by b > 1^[n] = 1^[n+1]."""
    b = _braid(b)
    if n <= 1:
        return b.is_trivial()
    return shelf_op(b, unit_right_power(n)) == unit_right_power(n + 1)


def unit_colors(n: int) -> ColorSeq:
    return (ONE,) * n


def _check_width(a: Sequence[Braid], w: BraidWord):
    if w.letters and w.width > len(a):
        raise ValueError(
            f"word needs {w.width} strands but the colour sequence has {len(a)}"
        )


def act_positive(a: Sequence, w: WordLike) -> ColorSeq:
    """Colour a positive word: sigma_i sends (.., a_i, a_(i+1), ..) to (.., a_i > a_(i+1), a_i, ..)."""
    w = as_word(w)
    if not w.is_positive:
        raise ValueError("act_positive needs a positive word; use act_partial")
    return act_partial(a, w)


def act_partial(a: Sequence, w: WordLike) -> ColorSeq:
    """Partial action of a braid word on a colour sequence.

    Negative letters sigma_i^-1 send (.., a_i, a_(i+1), ..) to
    (.., a_(i+1), x, ..) where a_(i+1) > x = a_i.  Raises
    :class:`ActionUndefined` carrying the 1-based position of the first
    letter whose division fails.
    """
    w = as_word(w)
    colors = [_braid(x) for x in a]
    _check_width(colors, w)
    for pos, letter in enumerate(w.letters, start=1):
        i = abs(letter) - 1
        if letter > 0:
            colors[i], colors[i + 1] = shelf_op(colors[i], colors[i + 1]), colors[i]
        else:
            try:
                x = left_divide(colors[i + 1], colors[i])
            except NotDivisible:
                raise ActionUndefined(pos) from None
            colors[i], colors[i + 1] = colors[i + 1], x
    return tuple(colors)


def shifted_product(a: Sequence) -> Braid:
    """b_1 . sh(b_2) . sh^2(b_3) ... sh^(n-1)(b_n)."""
    words = [shift_word(_braid(x).word, k) for k, x in enumerate(a)]
    return Braid(free_cancel(concat(*words))) if words else ONE


def is_shelf_triple(b1: WordLike, b2: WordLike, b3: WordLike) -> bool:
    """Check b1 > (b2 > b3) = (b1 > b2) > (b1 > b3)."""
    lhs = shelf_op(b1, shelf_op(b2, b3))
    rhs = shelf_op(shelf_op(b1, b2), shelf_op(b1, b3))
    return lhs == rhs


__all__ = [
    "ColorSeq",
    "shelf_op",
    "opposite_op",
    "right_power",
    "left_power",
    "unit_right_power",
    "is_left_divisible",
    "left_divide",
    "in_Bn",
    "unit_colors",
    "act_positive",
    "act_partial",
    "shifted_product",
    "is_shelf_triple",
]

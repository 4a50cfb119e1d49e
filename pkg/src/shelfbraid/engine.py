"""Group-level reasoning about braid words.

Equality is decided by Artin's faithful action on the free group (see
:mod:`shelfbraid.artin`); that action is the ground truth every other routine
here is checked against.  A homomorphic hash (:mod:`shelfbraid.hashkey`)
rejects most unequal pairs before any free-group work, and when the Artin
images of a genuinely long word outgrow :data:`QUICK_IMAGE_CAP` the verdict
falls back to handle reduction, which is also a complete decision procedure.
On top of this sit

* handle reduction, which turns any word into an equivalent
  sigma-definite one and hence decides sigma-positivity and the braid order;
* right subword reversing, which turns a word into u v^-1 with u, v positive;
* the shift-image test, deciding whether a braid lies in sh^p(B_inf).
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from functools import cached_property
from typing import Union

from . import artin
from .artin import Fingerprint
from .errors import CapExceeded
from .hashkey import BurauKey, key_of_letters
from .words import (
    EMPTY,
    BraidWord,
    concat,
    free_cancel,
    invert,
    parse,
    render,
    shift_word,
    sigma,
    unshift_word,
)

HANDLE_STEP_CAP = 1_000_000
REVERSE_STEP_CAP = 1_000_000
#: free-group image length beyond which equality switches to handle reduction
QUICK_IMAGE_CAP = 20_000

WordLike = Union[BraidWord, "Braid", str, tuple, list]


def as_word(x: WordLike) -> BraidWord:
    """Coerce braids, text and integer sequences to a :class:`BraidWord`."""
    if isinstance(x, BraidWord):
        return x
    if isinstance(x, Braid):
        return x.word
    if isinstance(x, str):
        return parse(x)
    return BraidWord(tuple(x))


@dataclass(frozen=True, eq=False)
class Braid:
    """An element of B_inf, carried by a representative word.

    Two braids compare equal exactly when their words represent the same
    group element.  Hashing uses the Burau key, a homomorphic image, so equal
    braids always share a hash.  Keys and fingerprints are computed once and
    cached; racing fills store the same value, so the caches are
    observationally transparent.
    """

    word: BraidWord = field(default=EMPTY)
    known_key: BurauKey | None = field(default=None, repr=False, compare=False)

    @classmethod
    def of(cls, *letters: int) -> "Braid":
        return cls(BraidWord(letters))

    @classmethod
    def parse(cls, text: str) -> "Braid":
        return cls(parse(text))

    @cached_property
    def fingerprint(self) -> Fingerprint:
        return artin.fingerprint(self.word)

    @cached_property
    def key(self) -> BurauKey:
        if self.known_key is not None:
            return self.known_key
        return key_of_letters(self.word.letters)

    def __eq__(self, other):
        if not isinstance(other, Braid):
            return NotImplemented
        if self.word == other.word:
            return True
        if self.key != other.key:
            return False
        return _decide_trivial(free_cancel(concat(self.word, invert(other.word))))

    def __hash__(self):
        return hash(self.key)

    def __mul__(self, other: "Braid") -> "Braid":
        return Braid(free_cancel(concat(self.word, other.word)))

    def inverse(self) -> "Braid":
        return Braid(invert(self.word))

    def shift(self, k: int = 1) -> "Braid":
        return Braid(shift_word(self.word, k))

    @property
    def width(self) -> int:
        return self.word.width

    def is_trivial(self) -> bool:
        if not self.word.letters:
            return True
        if not self.key.is_identity():
            return False
        return _decide_trivial(free_cancel(self.word))

    def __str__(self) -> str:
        return render(self.word)

    def __repr__(self) -> str:
        return f"Braid({render(self.word)!r})"


ONE = Braid()


def _decide_trivial(w: BraidWord) -> bool:
    """Exact triviality test for a word whose hash key is already trivial."""
    if not w.letters:
        return True
    try:
        return artin.acts_trivially(w, cap=QUICK_IMAGE_CAP)
    except CapExceeded:
        return not _reduce_letters(list(w.letters), HANDLE_STEP_CAP)


def is_trivial(w: WordLike) -> bool:
    """True iff the word represents the unit braid."""
    if isinstance(w, Braid):
        return w.is_trivial()
    w = free_cancel(as_word(w))
    if not w.letters:
        return True
    if not key_of_letters(w.letters).is_identity():
        return False
    return _decide_trivial(w)


def equal(w1: WordLike, w2: WordLike) -> bool:
    if isinstance(w1, Braid) and isinstance(w2, Braid):
        return w1 == w2
    return is_trivial(concat(as_word(w1), invert(as_word(w2))))


def fingerprint(w: WordLike) -> Fingerprint:
    if isinstance(w, Braid):
        return w.fingerprint
    return artin.fingerprint(as_word(w))


def artin_apply(w: WordLike, i: int) -> artin.FreeWord:
    return artin.artin_apply(as_word(w), i)


# -- handle reduction -------------------------------------------------------


def _reduce_letters(letters: list[int], step_cap: int) -> list[int]:
    if not letters:
        return letters
    top = max(abs(a) for a in letters) + 1
    # last[j]: position of the latest letter of index j seen so far (or -1);
    # snapshots[k] is that table as it stood just before position k
    last = [-1] * (top + 1)
    snapshots: list[tuple[int, ...]] = []
    steps = 0
    k = 0
    while k < len(letters):
        if k == len(snapshots):
            snapshots.append(tuple(last))
        else:
            snapshots[k] = tuple(last)
        a = letters[k]
        i = abs(a)
        p = max(last[1 : i + 1])
        if p >= 0 and letters[p] == -a:
            steps += 1
            if steps > step_cap:
                raise CapExceeded(
                    f"handle reduction exceeded {step_cap} steps", reached=steps
                )
            e = 1 if letters[p] > 0 else -1
            inner: list[int] = []
            for b in letters[p + 1 : k]:
                if abs(b) == i + 1:
                    d = 1 if b > 0 else -1
                    inner.extend((-(i + 1) * e, i * d, (i + 1) * e))
                else:
                    inner.append(b)
            letters[p : k + 1] = inner
            del snapshots[p + 1 :]
            last = list(snapshots[p])
            k = p
            continue
        last[i] = k
        k += 1
    return letters


def handle_reduce(w: WordLike, step_cap: int = HANDLE_STEP_CAP) -> BraidWord:
    """An equivalent word containing no handle.

    A handle is a factor sigma_i^e v sigma_i^-e where v only uses indices
    greater than i.  The handle whose right end comes first is always reduced
    next; it cannot contain a nested sigma_(i+1)-handle, so every reduction
    is a permitted one.  Reducing deletes the two ends and replaces each
    sigma_(i+1)^d inside v by sigma_(i+1)^-e sigma_i^d sigma_(i+1)^e.

    >>> handle_reduce("-1 2 1")
    BraidWord('2 1 -2')
    """
    return BraidWord(tuple(_reduce_letters(list(as_word(w).letters), step_cap)))


class Sign(enum.Enum):
    POSITIVE = "positive"
    NEGATIVE = "negative"
    TRIVIAL = "trivial"


@dataclass(frozen=True)
class SigmaClass:
    """Verdict of :func:`sigma_classify`: sigma_i-positive/negative or trivial."""

    sign: Sign
    index: int | None = None

    def __str__(self):
        if self.sign is Sign.TRIVIAL:
            return "trivial"
        return f"sigma-{self.sign.value} at index {self.index}"


TRIVIAL = SigmaClass(Sign.TRIVIAL)


def sigma_classify(w: WordLike, step_cap: int = HANDLE_STEP_CAP) -> SigmaClass:
    reduced = handle_reduce(w, step_cap)
    if not reduced.letters:
        return TRIVIAL
    i = min(abs(a) for a in reduced.letters)
    signs = {a > 0 for a in reduced.letters if abs(a) == i}
    if len(signs) != 1:
        # a handle-free word cannot mix signs at its lowest index
        raise AssertionError(f"handle reduction left a handle: {render(reduced)}")
    return SigmaClass(Sign.POSITIVE if signs.pop() else Sign.NEGATIVE, i)


class Order(enum.IntEnum):
    LESS = -1
    EQUAL = 0
    GREATER = 1


def compare(w1: WordLike, w2: WordLike, step_cap: int = HANDLE_STEP_CAP) -> Order:
    """Braid order: w1 < w2 iff w1^-1 w2 is sigma_i-positive for some i."""
    c = sigma_classify(concat(invert(as_word(w1)), as_word(w2)), step_cap)
    if c.sign is Sign.POSITIVE:
        return Order.LESS
    if c.sign is Sign.NEGATIVE:
        return Order.GREATER
    return Order.EQUAL


# -- subword reversing ------------------------------------------------------


def reverse_to_pos_neg(
    w: WordLike, step_cap: int = REVERSE_STEP_CAP
) -> tuple[BraidWord, BraidWord]:
    """Right reversing: return positive (u, v) with w = u v^-1.

    Every factor sigma_i^-1 sigma_j is rewritten until all negative letters
    sit on the right:

        sigma_i^-1 sigma_i -> empty
        sigma_i^-1 sigma_j -> sigma_j sigma_i^-1                         |i-j| >= 2
        sigma_i^-1 sigma_j -> sigma_j sigma_i sigma_j^-1 sigma_i^-1      |i-j| = 1
    """
    letters = list(as_word(w).letters)
    steps = 0
    k = 0
    while k < len(letters) - 1:
        a, b = letters[k], letters[k + 1]
        if a < 0 < b:
            steps += 1
            if steps > step_cap:
                raise CapExceeded(f"reversing exceeded {step_cap} steps", reached=steps)
            i, j = -a, b
            if i == j:
                letters[k : k + 2] = []
            elif abs(i - j) >= 2:
                letters[k : k + 2] = [j, -i]
            else:
                letters[k : k + 2] = [j, i, -j, -i]
            k = max(k - 1, 0)
        else:
            k += 1
    split = next((k for k, a in enumerate(letters) if a < 0), len(letters))
    u = BraidWord(tuple(letters[:split]))
    v = invert(BraidWord(tuple(letters[split:])))
    return u, v


def reverse_to_neg_pos(
    w: WordLike, step_cap: int = REVERSE_STEP_CAP
) -> tuple[BraidWord, BraidWord]:
    """Left reversing: return positive (v, u) with w = v^-1 u.

    Reading a word backwards is an anti-automorphism of B_inf, so this is
    right reversing applied to the mirrored word.
    """
    mirrored = BraidWord(tuple(reversed(as_word(w).letters)))
    u, v = reverse_to_pos_neg(mirrored, step_cap)
    return BraidWord(tuple(reversed(v.letters))), BraidWord(tuple(reversed(u.letters)))


# -- shift images -----------------------------------------------------------


def _unshift_once(beta: BraidWord) -> BraidWord | None:
    if all(abs(a) > 1 for a in beta.letters):
        return unshift_word(beta)
    sb = shift_word(beta, 1)
    commutator = concat(sb, sigma(1), invert(sb), sigma(1, -1))
    if not is_trivial(commutator):
        return None
    n = beta.width
    # handle trick: beta = sigma_n^-1 ... sigma_2^-1 sh(beta) sigma_2 ... sigma_n
    up = BraidWord(tuple(range(2, n + 1)))
    witness = free_cancel(concat(invert(up), sb, up))
    tidy = handle_reduce(witness)
    if len(tidy) < len(witness):
        witness = tidy
    return unshift_word(witness)


def shift_preimage(w: WordLike, p: int = 1) -> BraidWord | None:
    """A word x with sh^p(x) equal to w, or None when w is not in Im(sh^p)."""
    if p < 0:
        raise ValueError("p must be nonnegative")
    beta = free_cancel(as_word(w))
    for _ in range(p):
        beta = _unshift_once(beta)
        if beta is None:
            return None
    return beta


def is_shift_image(w: WordLike, p: int = 1) -> bool:
    return shift_preimage(w, p) is not None


def shift_depth(w: WordLike, limit: int | None = None) -> int | None:
    """Largest p with w in Im(sh^p); None for the unit braid (every p works)."""
    beta = free_cancel(as_word(w))
    if is_trivial(beta):
        return None
    p = 0
    while limit is None or p < limit:
        nxt = _unshift_once(beta)
        if nxt is None:
            return p
        beta = nxt
        p += 1
    return p

"""Braid words: finite sequences of signed Artin generators.

A word is stored as a tuple of nonzero integers, ``+i`` for sigma_i and
``-i`` for its inverse.  Everything here is purely syntactic: two words are
equal only if their letters are.  Deciding whether two words represent the
same braid is the job of :mod:`shelfbraid.engine`.

>>> w = parse("1 -2 1")
>>> w.letters
(1, -2, 1)
>>> render(invert(w))
'-1 2 -1'
>>> render(shift_word(w, 2))
'3 -4 3'
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator, NamedTuple

from .errors import BraidParseError, NotShifted

__all__ = [
    "GeneratorLetter",
    "BraidWord",
    "EMPTY",
    "parse",
    "render",
    "concat",
    "invert",
    "free_cancel",
    "shift_word",
    "unshift_word",
    "tau_word",
    "descending_run",
    "sigma",
]


class GeneratorLetter(NamedTuple):
    index: int
    sign: int

    @classmethod
    def from_int(cls, letter: int) -> "GeneratorLetter":
        return cls(abs(letter), 1 if letter > 0 else -1)

    def to_int(self) -> int:
        return self.index * self.sign


@dataclass(frozen=True, slots=True)
class BraidWord:
    letters: tuple[int, ...] = ()

    def __post_init__(self):
        letters = tuple(self.letters)
        for a in letters:
            if not isinstance(a, int) or isinstance(a, bool) or a == 0:
                raise ValueError(f"invalid braid letter {a!r}")
        object.__setattr__(self, "letters", letters)

    @classmethod
    def of(cls, *letters: int) -> "BraidWord":
        return cls(letters)

    def __len__(self) -> int:
        return len(self.letters)

    def __iter__(self) -> Iterator[int]:
        return iter(self.letters)

    def __getitem__(self, k):
        if isinstance(k, slice):
            return BraidWord(self.letters[k])
        return self.letters[k]

    def __add__(self, other: "BraidWord") -> "BraidWord":
        return concat(self, other)

    def __str__(self) -> str:
        return render(self)

    def __repr__(self) -> str:
        return f"BraidWord({render(self)!r})"

    @property
    def width(self) -> int:
        """Number of strands the word needs: 1 + largest index, 1 if empty."""
        return 1 + max((abs(a) for a in self.letters), default=0)

    @property
    def is_positive(self) -> bool:
        return all(a > 0 for a in self.letters)

    @property
    def is_empty(self) -> bool:
        return not self.letters

    def generators(self) -> list[GeneratorLetter]:
        return [GeneratorLetter.from_int(a) for a in self.letters]

    def inverse(self) -> "BraidWord":
        return invert(self)

    def shift(self, k: int = 1) -> "BraidWord":
        return shift_word(self, k)


EMPTY = BraidWord()


def sigma(i: int, sign: int = 1) -> BraidWord:
    """The one-letter word sigma_i^sign."""
    return BraidWord((i * sign,))


def parse(text: str) -> BraidWord:
    """Read whitespace-separated nonzero integers; blank text is the unit."""
    letters = []
    for token in text.split():
        try:
            a = int(token)
        except ValueError:
            raise BraidParseError(f"not an integer: {token!r}") from None
        if a == 0:
            raise BraidParseError(f"zero is not a generator: {token!r}")
        letters.append(a)
    return BraidWord(tuple(letters))


def render(w: BraidWord) -> str:
    return " ".join(str(a) for a in w.letters)


def concat(*words: BraidWord) -> BraidWord:
    out: list[int] = []
    for w in words:
        out.extend(w.letters)
    return BraidWord(tuple(out))


def invert(w: BraidWord) -> BraidWord:
    return BraidWord(tuple(-a for a in reversed(w.letters)))


def _cancel(letters: Iterable[int]) -> tuple[int, ...]:
    stack: list[int] = []
    for a in letters:
        if stack and stack[-1] == -a:
            stack.pop()
        else:
            stack.append(a)
    return tuple(stack)


def free_cancel(w: BraidWord) -> BraidWord:
    """Delete adjacent pairs sigma_i^e sigma_i^-e until none remain."""
    return BraidWord(_cancel(w.letters))


def shift_word(w: BraidWord, k: int = 1) -> BraidWord:
    if k < 0:
        raise ValueError("shift amount must be nonnegative")
    if k == 0:
        return w
    return BraidWord(tuple(a + k if a > 0 else a - k for a in w.letters))


def unshift_word(w: BraidWord) -> BraidWord:
    if any(abs(a) == 1 for a in w.letters):
        raise NotShifted(f"word uses sigma_1: {render(w)!r}")
    return BraidWord(tuple(a - 1 if a > 0 else a + 1 for a in w.letters))


def descending_run(top: int, bottom: int = 1) -> BraidWord:
    """sigma_top sigma_(top-1) ... sigma_bottom (empty when top < bottom)."""
    return BraidWord(tuple(range(top, bottom - 1, -1)))


def tau_word(p: int, n: int) -> BraidWord:
    """Positive word in which n strands cross over p strands.

    Built as the product over k = 1..n of the descending runs
    sigma_(p+k-1) ... sigma_k, so it has length p*n.
    """
    if p < 0 or n < 0:
        raise ValueError("tau_word needs nonnegative arguments")
    letters: list[int] = []
    for k in range(1, n + 1):
        letters.extend(range(p + k - 1, k - 1, -1))
    return BraidWord(tuple(letters))

"""Special braids: the sub-shelf of (B_inf, >) generated by the unit braid.

Recognition follows the colouring criterion: a braid b is special exactly
when (1, 1, 1, ...) . b is defined and equals (b, 1, 1, ...).  Arbitrary
braids decompose into shifted products of special braids, and terms over
the single generator are recovered by breadth-first search.
"""

from __future__ import annotations

import enum
import itertools
import threading
import warnings
from dataclasses import dataclass
from functools import cmp_to_key, lru_cache
from typing import Iterator, Sequence

from .engine import (
    ONE,
    Braid,
    Sign,
    WordLike,
    as_word,
    compare,
    reverse_to_neg_pos,
    reverse_to_pos_neg,
    sigma_classify,
)
from .errors import ActionUndefined, BraidParseError, CapExceeded, EngineInconsistency
from .shelf import act_partial, act_positive, shelf_op, shifted_product, unit_colors
from .words import BraidWord, concat, descending_run, invert

# -- terms ------------------------------------------------------------------


class Term:
    """A >-expression over one generator; evaluates at the unit braid."""

    __slots__ = ()

    @property
    def size(self) -> int:
        raise NotImplementedError

    @property
    def depth(self) -> int:
        raise NotImplementedError


@dataclass(frozen=True, slots=True)
class Leaf(Term):
    @property
    def size(self) -> int:
        return 1

    @property
    def depth(self) -> int:
        return 0

    def __str__(self):
        return "1"


@dataclass(frozen=True, slots=True)
class Node(Term):
    left: Term
    right: Term

    @property
    def size(self) -> int:
        return self.left.size + self.right.size

    @property
    def depth(self) -> int:
        return 1 + max(self.left.depth, self.right.depth)

    def __str__(self):
        return f"({self.left} > {self.right})"


LEAF = Leaf()


def parse_term(text: str) -> Term:
    """Read ``1`` or ``(T > T)``.

    >>> str(parse_term("((1>1) > 1)"))
    '((1 > 1) > 1)'
    """
    tokens = text.replace("(", " ( ").replace(")", " ) ").replace(">", " > ").split()
    pos = 0

    def expr() -> Term:
        nonlocal pos
        if pos >= len(tokens):
            raise BraidParseError(f"unexpected end of term: {text!r}")
        tok = tokens[pos]
        pos += 1
        if tok == "1":
            return LEAF
        if tok != "(":
            raise BraidParseError(f"unexpected token {tok!r} in term {text!r}")
        left = expr()
        if pos >= len(tokens) or tokens[pos] != ">":
            raise BraidParseError(f"expected '>' in term {text!r}")
        pos += 1
        right = expr()
        if pos >= len(tokens) or tokens[pos] != ")":
            raise BraidParseError(f"expected ')' in term {text!r}")
        pos += 1
        return Node(left, right)

    t = expr()
    if pos != len(tokens):
        raise BraidParseError(f"trailing input in term {text!r}")
    return t


def right_comb(m: int) -> Term:
    """Term of 1^[m]."""
    t: Term = LEAF
    for _ in range(m - 1):
        t = Node(LEAF, t)
    return t


def left_comb(m: int) -> Term:
    """Term of 1_[m]."""
    t: Term = LEAF
    for _ in range(m - 1):
        t = Node(t, LEAF)
    return t


@lru_cache(maxsize=100_000)
def eval_term(t: Term) -> Braid:
    if isinstance(t, Leaf):
        return ONE
    return shelf_op(eval_term(t.left), eval_term(t.right))


def all_terms(size: int) -> Iterator[Term]:
    """Every term with the given number of leaves."""
    if size == 1:
        yield LEAF
        return
    for k in range(1, size):
        for left in all_terms(k):
            for right in all_terms(size - k):
                yield Node(left, right)


# -- recognition and decomposition -------------------------------------------


def recognize_special(w: WordLike) -> Braid | None:
    """Return the braid if w represents a special braid, else None."""
    w = as_word(w)
    u, v = reverse_to_pos_neg(w)
    n = max(u.width, v.width)
    try:
        colors = act_partial(unit_colors(n), concat(u, invert(v)))
    except ActionUndefined:
        return None
    if not all(c.is_trivial() for c in colors[1:]):
        return None
    value = Braid(w)
    if colors[0] != value:
        raise EngineInconsistency(
            f"special braid {w} did not reproduce itself under colouring"
        )
    return colors[0]


def is_special(w: WordLike) -> bool:
    return recognize_special(w) is not None


def decompose_positive(w: WordLike, n: int | None = None) -> tuple[Braid, ...]:
    """The unique special (b_1, ..., b_n) with w = b_1 sh(b_2) ... sh^(n-1)(b_n)."""
    w = as_word(w)
    if not w.is_positive:
        raise ValueError("decompose_positive needs a positive word")
    if n is None:
        n = w.width
    colors = act_positive(unit_colors(n), w)
    if shifted_product(colors) != Braid(w):
        raise EngineInconsistency(f"shifted product does not reassemble {w}")
    return colors


@dataclass(frozen=True)
class SpecialDecomposition:
    """w = sh^(n-1)(negative[n-1])^-1 ... negative[0]^-1 . positive[0] ... sh^(n-1)(positive[n-1]).

    Both sequences are stored in natural order b_1, ..., b_n.
    """

    negative: tuple[Braid, ...]
    positive: tuple[Braid, ...]

    @property
    def n(self) -> int:
        return len(self.positive)

    def reassemble(self) -> Braid:
        return shifted_product(self.negative).inverse() * shifted_product(self.positive)


def decompose(w: WordLike, n: int | None = None) -> SpecialDecomposition:
    w = as_word(w)
    v, u = reverse_to_neg_pos(w)
    need = max(u.width, v.width)
    if n is None:
        n = need
    elif n < need:
        warnings.warn(f"padding decomposition from {n} to {need} entries", stacklevel=2)
        n = need
    dec = SpecialDecomposition(decompose_positive(v, n), decompose_positive(u, n))
    if dec.reassemble() != Braid(w):
        raise EngineInconsistency(f"special decomposition does not reassemble {w}")
    return dec


def positive_special_length(w: WordLike) -> int | None:
    """m if the positive word w equals sigma_m ... sigma_1, else None."""
    w = as_word(w)
    if not w.is_positive:
        raise ValueError("positive_special_length needs a positive word")
    m = len(w)
    return m if Braid(w) == Braid(descending_run(m)) else None


@dataclass(frozen=True)
class SimpleReport:
    simple: bool
    runs: tuple[int, ...] | None = None  # m_i with entry i equal to 1^[m_i + 1]


def positive_form(w: WordLike) -> BraidWord | None:
    """A positive word for the braid of w, or None when the braid is not positive.

    Left reversing gives w = v^-1 u; right reversing v^-1 u then computes the
    right lcm of u and v, and the negative part vanishes exactly when v
    left-divides u.  A single right-reversing pass of w is not enough: a word
    already of the form u v^-1 may still be positive.
    """
    v, u = reverse_to_neg_pos(w)
    u2, v2 = reverse_to_pos_neg(concat(invert(v), u))
    return None if v2.letters else u2


def simple_decomposition(w: WordLike) -> SimpleReport:
    """Decide whether w is a positive braid dividing some Delta_n.

    The special decomposition must consist of positive special braids,
    each of which is then some sigma_m ... sigma_1.
    """
    u = positive_form(w)
    if u is None:
        return SimpleReport(False)
    runs = []
    for entry in decompose_positive(u):
        eu = positive_form(entry.word)
        if eu is None:
            return SimpleReport(False)
        m = positive_special_length(eu)
        if m is None:
            return SimpleReport(False)
        runs.append(m)
    return SimpleReport(True, tuple(runs))


def is_simple(w: WordLike) -> bool:
    return simple_decomposition(w).simple


# -- enumeration, synthesis, complexity ---------------------------------------


class _SpecialEnumerator:
    """Shared memo of distinct special braids, grown by size and by depth.

    Each distinct element (by braid equality) is evaluated once and stored with
    a smallest term producing it.  Growth happens under a lock; readers only
    ever see fully built levels.
    """

    def __init__(self):
        self._lock = threading.Lock()
        self.by_size: list[list[tuple[Braid, Term]]] = [[], [(ONE, LEAF)]]
        self.size_seen: dict = {ONE: LEAF}
        self.by_depth: list[list[tuple[Braid, Term]]] = [[(ONE, LEAF)]]
        self.depth_seen: dict = {ONE: 0}

    def size_level(self, s: int) -> list[tuple[Braid, Term]]:
        with self._lock:
            while len(self.by_size) <= s:
                k = len(self.by_size)
                fresh = []
                for a in range(1, k):
                    for x, tx in self.by_size[a]:
                        for y, ty in self.by_size[k - a]:
                            z = shelf_op(x, y)
                            if z not in self.size_seen:
                                t = Node(tx, ty)
                                self.size_seen[z] = t
                                fresh.append((z, t))
                self.by_size.append(fresh)
            return self.by_size[s]

    def depth_level(self, d: int) -> list[tuple[Braid, Term]]:
        """Braids of complexity exactly d."""
        with self._lock:
            while len(self.by_depth) <= d:
                prev = [e for level in self.by_depth for e in level]
                k = len(self.by_depth)
                fresh = []
                # at least one operand must have complexity k - 1
                for (x, tx), (y, ty) in itertools.product(prev, prev):
                    dx = self.depth_seen[x]
                    dy = self.depth_seen[y]
                    if max(dx, dy) != k - 1:
                        continue
                    z = shelf_op(x, y)
                    if z not in self.depth_seen:
                        self.depth_seen[z] = k
                        fresh.append((z, Node(tx, ty)))
                self.by_depth.append(fresh)
            return self.by_depth[d]


_ENUM = _SpecialEnumerator()


def specials_by_size(max_size: int) -> list[tuple[Braid, Term]]:
    """All distinct special braids with a term of at most max_size leaves."""
    return [e for s in range(1, max_size + 1) for e in _ENUM.size_level(s)]


def specials_by_complexity(max_depth: int) -> list[tuple[Braid, int]]:
    return [(b, d) for d in range(max_depth + 1) for b, _ in _ENUM.depth_level(d)]


def synthesize_term(b: WordLike, size_cap: int = 12) -> Term:
    """A term evaluating to the special braid b, of least possible size."""
    target = b if isinstance(b, Braid) else Braid(as_word(b))
    if recognize_special(target.word) is None:
        raise ValueError(f"{target!r} is not special")
    for s in range(1, size_cap + 1):
        _ENUM.size_level(s)
        # the memo may already hold larger levels, so respect the cap explicitly
        t = _ENUM.size_seen.get(target)
        if t is not None and t.size <= size_cap:
            return t
    raise CapExceeded(
        f"no term of size <= {size_cap} found",
        reached=sum(len(_ENUM.by_size[s]) for s in range(1, size_cap + 1)),
    )


def complexity(b: WordLike, cap: int = 4) -> int:
    """Least depth of a term evaluating to the special braid b."""
    target = b if isinstance(b, Braid) else Braid(as_word(b))
    for d in range(cap + 1):
        _ENUM.depth_level(d)
        d_seen = _ENUM.depth_seen.get(target)
        if d_seen is not None and d_seen <= cap:
            return d_seen
    raise CapExceeded(f"complexity exceeds {cap}", reached=cap)


# -- order on special braids ---------------------------------------------------


class Division(enum.Enum):
    """Verdict of :func:`special_compare`; BELOW means b1 iteratively divides b2."""

    BELOW = "below"
    EQUAL = "equal"
    ABOVE = "above"


def special_compare(b1: WordLike, b2: WordLike) -> Division:
    c = sigma_classify(concat(invert(as_word(b1)), as_word(b2)))
    if c.sign is Sign.TRIVIAL:
        return Division.EQUAL
    if c.index != 1:
        raise EngineInconsistency(
            f"quotient of special braids is sigma_{c.index}-definite, expected sigma_1"
        )
    return Division.BELOW if c.sign is Sign.POSITIVE else Division.ABOVE


# -- Laver conjecture probe ------------------------------------------------------


@dataclass(frozen=True)
class ProbeReport:
    words_tried: int
    defined: int
    distinct: int
    minimum: Braid | None
    sorted_braids: tuple[Braid, ...]
    all_positive_defined: bool


def all_words(n_strands: int, length: int) -> Iterator[BraidWord]:
    letters = [s * i for i in range(1, n_strands) for s in (1, -1)]
    for k in range(length + 1):
        for combo in itertools.product(letters, repeat=k):
            yield BraidWord(combo)


def laver_conjecture_probe(a: Sequence, max_length: int) -> ProbeReport:
    """Collect braids of length <= max_length whose action on a is defined."""
    a = tuple(x if isinstance(x, Braid) else Braid(as_word(x)) for x in a)
    tried = defined = 0
    seen: dict = {}
    all_pos = True
    for w in all_words(len(a), max_length):
        tried += 1
        try:
            act_partial(a, w)
        except ActionUndefined:
            if w.is_positive:
                all_pos = False
            continue
        defined += 1
        b = Braid(w)
        seen.setdefault(b, b)
    ordered = sorted(seen.values(), key=cmp_to_key(lambda x, y: int(compare(x.word, y.word))))
    return ProbeReport(
        words_tried=tried,
        defined=defined,
        distinct=len(ordered),
        minimum=ordered[0] if ordered else None,
        sorted_braids=tuple(ordered),
        all_positive_defined=all_pos,
    )

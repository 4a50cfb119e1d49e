"""The Burau shelf on GL_inf(Z[t, t^-1]).

Matrices are finite blocks understood as the identity beyond their size; the
shift adds a new first row and column carrying a 1 on the diagonal.  With
the unreduced Burau representation sigma_i -> Sigma_i, the map
:func:`burau_of` is a morphism from the braid shelf to

    A > B = A . sh(B) . Sigma_1 . sh(A)^-1.

Every matrix carries its inverse, built from generator inverses, so no
elimination over the Laurent ring is ever needed.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from functools import lru_cache

from ..engine import WordLike, as_word
from .laurent import ONE, T, T_INV, ZERO, LaurentPoly, parse_laurent

Rows = tuple[tuple[LaurentPoly, ...], ...]


def _identity(n: int) -> list[list[LaurentPoly]]:
    return [[ONE if i == j else ZERO for j in range(n)] for i in range(n)]


def _trim(rows) -> Rows:
    n = len(rows)
    while n > 0:
        k = n - 1
        if rows[k][k] != ONE or any(rows[k][j] for j in range(k)) or any(rows[j][k] for j in range(k)):
            break
        n -= 1
    return tuple(tuple(r[:n]) for r in rows[:n])


def _pad(rows: Rows, n: int, shift: int = 0) -> list[list[LaurentPoly]]:
    out = _identity(n)
    for i, r in enumerate(rows):
        out[i + shift][shift : shift + len(r)] = r
    return out


def _matmul(a, b):
    n = len(a)
    out = []
    for i in range(n):
        row = []
        for j in range(n):
            acc = ZERO
            for k in range(n):
                if a[i][k] and b[k][j]:
                    acc = acc + a[i][k] * b[k][j]
            row.append(acc)
        out.append(row)
    return out


@dataclass(frozen=True, eq=False)
class BurauMatrix:
    rows: Rows = ()
    inverse_rows: Rows = ()

    def __post_init__(self):
        object.__setattr__(self, "rows", _trim([list(r) for r in self.rows]))
        object.__setattr__(self, "inverse_rows", _trim([list(r) for r in self.inverse_rows]))

    @property
    def n(self) -> int:
        return len(self.rows)

    def entry(self, i: int, j: int) -> LaurentPoly:
        """1-based entry of the infinite matrix."""
        if i <= self.n and j <= self.n:
            return self.rows[i - 1][j - 1]
        return ONE if i == j else ZERO

    def __eq__(self, other):
        return isinstance(other, BurauMatrix) and self.rows == other.rows

    def __hash__(self):
        return hash(self.rows)

    def __mul__(self, other: "BurauMatrix") -> "BurauMatrix":
        n = max(self.n, other.n)
        fwd = _matmul(_pad(self.rows, n), _pad(other.rows, n))
        back = _matmul(_pad(other.inverse_rows, n), _pad(self.inverse_rows, n))
        return BurauMatrix(tuple(map(tuple, fwd)), tuple(map(tuple, back)))

    def inverse(self) -> "BurauMatrix":
        return BurauMatrix(self.inverse_rows, self.rows)

    def shift(self, k: int = 1) -> "BurauMatrix":
        if not self.rows:
            return self
        n = self.n + k
        return BurauMatrix(
            tuple(map(tuple, _pad(self.rows, n, k))),
            tuple(map(tuple, _pad(self.inverse_rows, n, k))),
        )

    def to_json(self) -> list[list[str]]:
        return [[str(x) for x in r] for r in self.rows]

    def __str__(self) -> str:
        return json.dumps(self.to_json())


IDENTITY = BurauMatrix()

_BLOCK = ((ONE - T, T), (ONE, ZERO))
_BLOCK_INV = ((ZERO, ONE), (T_INV, (T - ONE) * T_INV))


@lru_cache(maxsize=None)
def burau_sigma(i: int, sign: int = 1) -> BurauMatrix:
    """Sigma_i (or its inverse): the 2x2 block at rows and columns i, i+1."""
    if i < 1:
        raise ValueError("generator index must be positive")
    fwd, back = (_BLOCK, _BLOCK_INV) if sign > 0 else (_BLOCK_INV, _BLOCK)
    n = i + 1
    return BurauMatrix(tuple(map(tuple, _pad(fwd, n, i - 1))), tuple(map(tuple, _pad(back, n, i - 1))))


def burau_of(w: WordLike) -> BurauMatrix:
    out = IDENTITY
    for a in as_word(w).letters:
        out = out * burau_sigma(abs(a), 1 if a > 0 else -1)
    return out


def burau_shelf_op(a: BurauMatrix, b: BurauMatrix) -> BurauMatrix:
    return a * b.shift() * burau_sigma(1) * a.shift().inverse()


def burau_left_power(a: BurauMatrix, m: int) -> BurauMatrix:
    if m < 1:
        raise ValueError("powers start at m = 1")
    out = a
    for _ in range(m - 1):
        out = burau_shelf_op(out, a)
    return out


def det(a: BurauMatrix) -> LaurentPoly:
    """Determinant by Laplace expansion along rows, memoised on column sets."""
    rows = a.rows
    n = len(rows)

    @lru_cache(maxsize=None)
    def minor(r: int, cols: frozenset) -> LaurentPoly:
        if r == n:
            return ONE
        acc = ZERO
        for pos, c in enumerate(sorted(cols)):
            x = rows[r][c]
            if x:
                term = x * minor(r + 1, cols - {c})
                acc = acc - term if pos % 2 else acc + term
        return acc

    return minor(0, frozenset(range(n)))


def shtr(a: BurauMatrix) -> LaurentPoly:
    """Shifted trace: the sum of the entries just above the diagonal."""
    acc = ZERO
    for i in range(a.n - 1):
        acc = acc + a.rows[i][i + 1]
    return acc


def parse_rows(text: str) -> Rows:
    """Read the row-major JSON form back into (trimmed) polynomial rows.

    The text form carries no inverse, so this recovers rows for comparison
    only; matrices to compute with come from :func:`burau_of`.
    """
    data = json.loads(text)
    return _trim([[parse_laurent(x) for x in r] for r in data])

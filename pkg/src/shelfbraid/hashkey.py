"""Cheap homomorphic hash keys for braids.

The Burau matrix of a braid, with t specialised to a fixed residue modulo a
large prime, is a group homomorphism B_inf -> GL(Z/P).  Distinct keys prove
distinct braids; equal keys only suggest equality, which is then settled
exactly by the engine.  Keys compose through products, shifts and inverses,
so the shelf operation can compute the key of b1 > b2 from those of b1, b2
without touching the (possibly long) result word.
"""

from __future__ import annotations

from dataclasses import dataclass

P = (1 << 61) - 1
T = 1_000_003
T_INV = pow(T, P - 2, P)

Matrix = tuple[tuple[int, ...], ...]


def _identity(n: int) -> list[list[int]]:
    return [[int(i == j) for j in range(n)] for i in range(n)]


def _apply_letter(m: list[list[int]], a: int) -> None:
    """Right-multiply m in place by the generator matrix of letter a."""
    i = abs(a) - 1
    for row in m:
        x, y = row[i], row[i + 1]
        if a > 0:
            # block [[1-t, t], [1, 0]]
            row[i] = ((1 - T) * x + y) % P
            row[i + 1] = (T * x) % P
        else:
            # block [[0, 1], [1/t, (t-1)/t]]
            row[i] = (T_INV * y) % P
            row[i + 1] = (x + (T - 1) * T_INV * y) % P


def _mul(a: list[list[int]], b: list[list[int]]) -> list[list[int]]:
    cols = list(zip(*b))
    return [[sum(x * y for x, y in zip(row, col)) % P for col in cols] for row in a]


def _pad(m: Matrix, n: int, shift: int = 0) -> list[list[int]]:
    """Embed m at offset shift inside the n x n identity."""
    out = _identity(n)
    for i, row in enumerate(m):
        out[i + shift][shift : shift + len(row)] = row
    return out


def _trim(m: list[list[int]]) -> Matrix:
    n = len(m)
    while n > 0:
        k = n - 1
        if m[k][k] != 1 or any(m[k][j] for j in range(k)) or any(m[j][k] for j in range(k)):
            break
        n -= 1
    return tuple(tuple(row[:n]) for row in m[:n])


@dataclass(frozen=True, slots=True)
class BurauKey:
    """Trimmed Burau matrix mod P together with its inverse."""

    mat: Matrix
    inv: Matrix

    @property
    def size(self) -> int:
        return len(self.mat)

    def is_identity(self) -> bool:
        return not self.mat

    def __hash__(self):
        return hash(self.mat)

    def __eq__(self, other):
        return isinstance(other, BurauKey) and self.mat == other.mat


def key_of_letters(letters: tuple[int, ...]) -> BurauKey:
    n = 1 + max((abs(a) for a in letters), default=0)
    m = _identity(n)
    for a in letters:
        _apply_letter(m, a)
    mi = _identity(n)
    for a in reversed(letters):
        _apply_letter(mi, -a)
    return BurauKey(_trim(m), _trim(mi))


def key_product(*keys: BurauKey, shifts: tuple[int, ...] | None = None, inverted=None) -> BurauKey:
    """Key of sh^(s_1)(k_1)^(e_1) ... sh^(s_r)(k_r)^(e_r)."""
    shifts = shifts or (0,) * len(keys)
    inverted = inverted or (False,) * len(keys)
    n = max([1] + [k.size + s for k, s in zip(keys, shifts)])
    m = _identity(n)
    mi = _identity(n)
    for k, s, e in zip(keys, shifts, inverted):
        fwd, back = (k.inv, k.mat) if e else (k.mat, k.inv)
        if fwd:
            m = _mul(m, _pad(fwd, n, s))
            mi = _mul(_pad(back, n, s), mi)
    return BurauKey(_trim(m), _trim(mi))


SIGMA1 = key_of_letters((1,))

"""Laver tables.

For every N there is a unique operation on {1, ..., N} with x > 1 = x + 1
(mod N) and x > (y > 1) = (x > y) > (x > 1); it is selfdistributive exactly
when N is a power of 2.  Rows are filled from N downwards using

    N > y = y,    x > 1 = x + 1,    x > (y + 1) = (x > y) > (x + 1),

and each row x < N is strictly increasing until it reaches N, after which
it repeats.  So only one period per row is computed; the rest is tiled.

Small tables live in memory.  Larger ones (n > 12) are streamed into a
memory-mapped file under ``$SHELFBRAID_CACHE`` (default ``./.cache``),
written to a temporary name and renamed into place once complete.
"""

from __future__ import annotations

import csv
import io
import logging
import os
import tempfile
from dataclasses import dataclass
from pathlib import Path

import numpy as np

log = logging.getLogger(__name__)

IN_MEMORY_MAX_N = 12
DISK_MAX_N = 16


def cache_dir() -> Path:
    return Path(os.environ.get("SHELFBRAID_CACHE", "./.cache"))


def _dtype(size: int):
    return np.uint16 if size <= 1 << 16 else np.uint32


def _fill(table: np.ndarray, size: int) -> None:
    """Fill table (0-based storage of 1-based values minus one) in place."""
    table[size - 1, :] = np.arange(size, dtype=table.dtype)
    for x in range(size - 1, 0, -1):
        # 1-based: a_1 = x + 1, a_(k+1) = T[a_k, x + 1], until a_k = size
        period = []
        a = x + 1
        while True:
            period.append(a)
            if a == size:
                break
            a = int(table[a - 1, x]) + 1
        p = len(period)
        pattern = np.asarray(period, dtype=np.int64) - 1
        reps = -(-size // p)
        table[x - 1, :] = np.tile(pattern, reps)[:size]


@dataclass(frozen=True, eq=False)
class LaverTable:
    """The table entry(x, y) = x > y on {1, ..., N}, values 1-based."""

    N: int
    table: np.ndarray

    def entry(self, x: int, y: int) -> int:
        return int(self.table[x - 1, y - 1]) + 1

    def op(self, x: int, y: int) -> int:
        return self.entry(x, y)

    def row(self, x: int) -> tuple[int, ...]:
        return tuple(int(v) + 1 for v in self.table[x - 1])

    def rows(self) -> list[tuple[int, ...]]:
        return [self.row(x) for x in range(1, self.N + 1)]

    def values(self) -> np.ndarray:
        """Dense 1-based entries as int64 (copies)."""
        return self.table.astype(np.int64) + 1

    def __eq__(self, other):
        return (
            isinstance(other, LaverTable)
            and self.N == other.N
            and np.array_equal(self.table, other.table)
        )

    def to_csv(self) -> str:
        buf = io.StringIO()
        writer = csv.writer(buf, lineterminator="\n")
        for r in self.rows():
            writer.writerow(r)
        return buf.getvalue()


def build_cyclic(N: int) -> LaverTable:
    """The unique cyclic table on N elements (a shelf iff N is a power of 2)."""
    if N < 1:
        raise ValueError("N must be positive")
    table = np.empty((N, N), dtype=_dtype(N))
    _fill(table, N)
    table.setflags(write=False)
    return LaverTable(N, table)


def laver_table(n: int) -> LaverTable:
    """A_n, of size 2^n; cached on disk for n > IN_MEMORY_MAX_N."""
    if n < 0:
        raise ValueError("n must be nonnegative")
    if n <= IN_MEMORY_MAX_N:
        return build_cyclic(1 << n)
    if n > DISK_MAX_N:
        raise ValueError(f"tables beyond n = {DISK_MAX_N} are not supported")
    return _disk_table(n)


def _disk_table(n: int) -> LaverTable:
    size = 1 << n
    dtype = _dtype(size)
    directory = cache_dir()
    path = directory / f"laver_{n}.{np.dtype(dtype).name}"
    if not path.exists():
        directory.mkdir(parents=True, exist_ok=True)
        fd, tmp = tempfile.mkstemp(dir=directory, prefix=f".laver_{n}_")
        os.close(fd)
        try:
            mm = np.memmap(tmp, dtype=dtype, mode="w+", shape=(size, size))
            log.info("building A_%d into %s", n, path)
            _fill(mm, size)
            mm.flush()
            del mm
            os.replace(tmp, path)
        except BaseException:
            os.unlink(tmp)
            raise
    table = np.memmap(path, dtype=dtype, mode="r", shape=(size, size))
    return LaverTable(size, table)


def is_left_shelf(T: LaverTable) -> bool:
    """Exhaustive check of x > (y > z) = (x > y) > (x > z)."""
    t = np.asarray(T.table, dtype=np.int64)
    for x in range(T.N):
        row = t[x]
        lhs = row[t]  # x > (y > z), indexed [y, z]
        rhs = t[row[:, None], row[None, :]]  # (x > y) > (x > z)
        if not np.array_equal(lhs, rhs):
            return False
    return True


def row_period(T: LaverTable, x: int) -> int:
    """Least p with entry(x, y + p) = entry(x, y) wherever both are defined."""
    row = np.asarray(T.table[x - 1])
    for p in range(1, T.N + 1):
        if p == T.N or np.array_equal(row[p:], row[:-p]):
            return p
    return T.N


def row_periods(T: LaverTable) -> list[int]:
    return [row_period(T, x) for x in range(1, T.N + 1)]


def _is_power_of_two(k: int) -> bool:
    return k > 0 and k & (k - 1) == 0


def project(T: LaverTable) -> LaverTable:
    """Reduce A_(n+1) modulo 2^n, representatives taken in 1..2^n."""
    if T.N < 2 or not _is_power_of_two(T.N):
        raise ValueError("projection needs a table of size 2^(n+1)")
    m = T.N // 2
    block = np.asarray(T.table[:m, :m], dtype=np.int64) % m
    out = block.astype(_dtype(m))
    out.setflags(write=False)
    return LaverTable(m, out)


def projection_is_homomorphism(T: LaverTable) -> bool:
    """Check x mod 2^n is a morphism A_(n+1) -> A_n on all pairs."""
    small = project(T)
    m = small.N
    t = np.asarray(T.table, dtype=np.int64) % m
    idx = np.arange(T.N) % m
    s = np.asarray(small.table, dtype=np.int64)
    return bool(np.array_equal(t, s[idx[:, None], idx[None, :]]))


def laver_powers(T: LaverTable, x: int, m: int) -> tuple[int, int]:
    """(x^[m], x_[m]) computed in the table."""
    if m < 1:
        raise ValueError("powers start at m = 1")
    right = left = x
    for _ in range(m - 1):
        right = T.entry(x, right)
        left = T.entry(left, x)
    return right, left

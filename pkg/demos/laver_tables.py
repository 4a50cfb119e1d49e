"""Laver tables: build, check, project."""

import time

from shelfbraid.laver import build_cyclic, is_left_shelf, laver_table, project, row_periods

print(build_cyclic(8).to_csv())
print("sizes <= 33 giving a shelf:", [N for N in range(1, 34) if is_left_shelf(build_cyclic(N))])

start = time.perf_counter()
a10 = laver_table(10)
print(f"A10 built in {time.perf_counter() - start:.3f}s")
print("distinct row periods of A10:", sorted(set(row_periods(a10))))
print("A10 projects onto A9:", project(a10) == laver_table(9))

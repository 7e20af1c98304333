"""
How large can a torsion period be at a given order?
===================================================

Any d x d torsion matrix has period lcm(J) where the totients of J sum
to at most d.  The optimum grows much faster than the order, and the
witness sets are tiny.
"""

import time

from torsionkit import (
    block_diag,
    companion_matrix,
    cyclotomic,
    lcm_upto,
    max_torsion_period,
    oracle_cycle_detect,
    torsion_bound,
)

print(" d  max period  witness J")
for d in range(1, 17):
    period, witness = max_torsion_period(d)
    print(f"{d:2}  {period:10}  {sorted(witness)}")

# Realize one optimum and measure its period by brute cycling.
d = 6
period, witness = max_torsion_period(d)
m = block_diag(*(companion_matrix(cyclotomic(j).to_rational()) for j in sorted(witness)))
print(f"\nwitness matrix for d={d} is {m.order}x{m.order}, claimed period {period}")
t0 = time.perf_counter()
print("first repeat among positive powers:", oracle_cycle_detect(m, period + 2))
print(f"({time.perf_counter() - t0:.2f}s of plain matrix powering)")

# Contrast with lcm(1..n), which controls the universal annihilator and
# explodes much faster: it exceeds 2^(n/2).
print("\n n  lcm(1..n)        torsion_bound gives n for d:")
for d in (1, 2, 3, 4, 8):
    n = torsion_bound(d)
    print(f"{n:2}  {lcm_upto(n):10}        d={d}")

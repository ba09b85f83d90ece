"""Bernoulli numbers out of a transform matrix.

Seed the first row with 1, 1/2, 1/3, ... and run the three-term recurrence
at x = -1, y = 1.  The first column is the Bernoulli sequence.
"""
from fractions import Fraction

from fubini_kit import bernoulli, binomial, chen, forward_fill

grid = forward_fill(chen(8), -1, 1)
for n in range(4):
    print(" ".join(f"{str(v):>6}" for v in grid.row(n)))

B = bernoulli(20)
print("\nB_0..B_12:", ", ".join(str(b) for b in list(B)[:13]))

# every number satisfies sum_k C(n+1, k) B_k = 0
assert all(sum(binomial(n + 1, k) * B[k] for k in range(n + 1)) == 0 for n in range(1, 21))
assert B[4] == Fraction(-1, 30)
print("recurrence holds for n = 1..20")

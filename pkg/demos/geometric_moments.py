"""F_n(x, y) as a moment of a geometric random variable.

The exact series is truncated with a certified tail bound, and a seeded
Monte Carlo estimate is set next to it.
"""
from fractions import Fraction

from fubini_kit import fubini_gen, moment_monte_carlo, moment_partial_sum
from fubini_kit.stochastic import cutoff_for

tol = Fraction(1, 10 ** 20)
print(f"{'n':>2} {'(x,y)':>7} {'exact':>10} {'K':>4} {'tail bound':>12} {'MC mean':>12} {'SE':>8}")
for x, y in [(1, 1), (2, 1), (1, 3)]:
    for n in range(1, 7):
        exact = fubini_gen(n).eval(x, y)
        K = cutoff_for(n, x, y, tol)
        value, bound = moment_partial_sum(n, x, y, K)
        assert abs(exact - value) <= bound
        est = moment_monte_carlo(n, x, y, 200_000, seed=n)
        print(f"{n:>2} {str((x, y)):>7} {str(exact):>10} {K:>4} {float(bound):12.2e} "
              f"{est.mean:12.2f} {est.stderr:8.2f}")

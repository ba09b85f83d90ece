"""Generalized Fubini values as moments of a shifted geometric variable.

For ``x, y > 0`` put ``p = y/(x+y)`` and ``r = q = x/(x+y)``.  With
``X ~ Geometric(p)`` on ``{1, 2, ...}``,

    F_n(x, y) = p * sum_{k>=0} r^k (y k)^n = y^n E[(X - 1)^n].

Tail bound used by :func:`moment_partial_sum`
---------------------------------------------
Let ``T_k = r^k (y k)^n``.  For ``k >= K + 1`` the ratio of consecutive
terms is ``T_{k+1}/T_k = r (1 + 1/k)^n <= r (1 + 1/(K+1))^n =: rho``.  When
``rho < 1`` the tail is dominated by a geometric series:

    p * sum_{k>K} T_k <= p * T_{K+1} / (1 - rho).

``rho < 1`` holds once ``K + 1 > 1 / ((1/r)^(1/n) - 1)``, roughly
``K >= n / ln(1/r)``.  Below that cutoff no bound is claimed (``None``).
Every quantity is an exact rational.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Tuple

import numpy as np

from .kernel import BiPoly, as_rational, factorial, format_rational
from .polyfam import bell, fubini_gen


@dataclass(frozen=True)
class GeometricLaw:
    """Success probability ``p = y/(x+y)`` of the geometric law on {1, 2, ...}."""

    p: Fraction
    q: Fraction

    @classmethod
    def from_params(cls, x, y) -> "GeometricLaw":
        x, y = as_rational(x), as_rational(y)
        if x < 0 or y <= 0:
            raise ValueError(f"need x >= 0 and y > 0 for a geometric law, got x={x}, y={y}")
        p = y / (x + y)
        return cls(p, 1 - p)

    @property
    def degenerate(self) -> bool:
        """True when ``p = 1`` (``x = 0``): all mass sits at ``X = 1``."""
        return self.p == 1


def _check_params(x, y, allow_zero_x: bool) -> Tuple[Fraction, Fraction]:
    x, y = as_rational(x), as_rational(y)
    if y <= 0 or x < 0 or (x == 0 and not allow_zero_x):
        raise ValueError(f"moment representation needs x > 0 and y > 0, got x={x}, y={y}")
    return x, y


def tail_bound(n: int, x, y, K: int) -> Optional[Fraction]:
    """Rigorous bound on ``p * sum_{k>K} r^k (y k)^n``, or None if not yet valid."""
    x, y = _check_params(x, y, allow_zero_x=True)
    if x == 0:
        return Fraction(0)
    r = x / (x + y)
    p = y / (x + y)
    rho = r * (1 + Fraction(1, K + 1)) ** n
    if rho >= 1:
        return None
    first = r ** (K + 1) * (y * (K + 1)) ** n
    return p * first / (1 - rho)


def cutoff_for(n: int, x, y, tol) -> int:
    """A cutoff ``K`` with ``tail_bound <= tol`` (doubling, then bisection)."""
    tol = as_rational(tol)
    if tol <= 0:
        raise ValueError("tolerance must be positive")

    def ok(K):
        b = tail_bound(n, x, y, K)
        return b is not None and b <= tol

    hi = 1
    while not ok(hi):
        hi *= 2
    lo = hi // 2
    while hi - lo > 1:
        mid = (lo + hi) // 2
        if ok(mid):
            hi = mid
        else:
            lo = mid
    return hi


def moment_partial_sum(n: int, x, y, K: int) -> Tuple[Fraction, Optional[Fraction]]:
    """Exact ``p * sum_{k=0}^{K} r^k (y k)^n`` and its tail bound.

    ``x = 0`` is accepted: the law collapses to a point mass, the sum is
    exact and the tail bound is zero.
    """
    if n < 0 or K < 0:
        raise ValueError("n and K must be nonnegative")
    x, y = _check_params(x, y, allow_zero_x=True)
    r = x / (x + y)
    p = y / (x + y)
    total = Fraction(0)
    rk = Fraction(1)
    for k in range(K + 1):
        total += rk * (y * k) ** n  # 0**0 == 1 covers the n = 0 mass term
        rk *= r
    return p * total, tail_bound(n, x, y, K)


@dataclass(frozen=True)
class MonteCarloEstimate:
    mean: float
    stderr: float
    samples: int


def sample_geometric(rng: np.random.Generator, p: float, size: int) -> np.ndarray:
    """Inverse-transform draws on {1, 2, ...}: ``ceil(ln U / ln(1 - p))``."""
    u = 1.0 - rng.random(size)  # in (0, 1]
    if p >= 1.0:
        return np.ones(size, dtype=np.int64)
    draws = np.ceil(np.log(u) / math.log1p(-p))
    return np.maximum(draws, 1).astype(np.int64)


def moment_monte_carlo(n: int, x, y, samples: int, seed: int,
                       shards: int = 1) -> MonteCarloEstimate:
    """Seeded estimate of ``y^n E[(X-1)^n]`` with its standard error.

    Samples are split over ``shards`` independent streams spawned from
    ``seed``; shard sums are merged, so the result does not depend on the
    order in which shards finish.
    """
    x, y = _check_params(x, y, allow_zero_x=False)
    if samples <= 0:
        raise ValueError("samples must be positive")
    if shards <= 0:
        raise ValueError("shards must be positive")
    if n == 0:
        return MonteCarloEstimate(1.0, 0.0, samples)
    p = float(y / (x + y))
    yf = float(y)
    streams = np.random.SeedSequence(seed).spawn(shards)
    sizes = [samples // shards + (1 if i < samples % shards else 0) for i in range(shards)]
    s1 = 0.0
    s2 = 0.0
    for stream, size in zip(streams, sizes):
        if not size:
            continue
        rng = np.random.default_rng(stream)
        values = (yf * (sample_geometric(rng, p, size) - 1).astype(np.float64)) ** n
        s1 += float(values.sum())
        s2 += float(np.square(values).sum())
    mean = s1 / samples
    var = max(s2 / samples - mean * mean, 0.0) * samples / max(samples - 1, 1)
    return MonteCarloEstimate(mean, math.sqrt(var / samples), samples)


def gamma_moment_reduce(n: int, x=None, y=None):
    """Integrate ``y^n phi_n((x/y) lam) e^(-lam)`` over ``lam`` in closed form.

    Each ``lam^k`` integrates to ``k!``; the Bell coefficient of ``x^k``
    therefore becomes ``k! x^k y^(n-k)``.  Without a point the result is a
    BiPoly; with rationals (``y != 0``) it is a Fraction.
    """
    phi = bell(n)
    if x is None and y is None:
        return BiPoly({(k, n - k): c * factorial(k) for (k, _), c in phi.items()})
    x, y = as_rational(x), as_rational(y)
    if y == 0:
        raise ValueError("the integral representation needs y != 0")
    total = Fraction(0)
    for (k, _), c in phi.items():
        total += c * (x / y) ** k * factorial(k)
    return y ** n * total


def gamma_moment_check(n: int, x=None, y=None) -> bool:
    reduced = gamma_moment_reduce(n, x, y)
    target = fubini_gen(n)
    if x is None and y is None:
        return reduced == target
    return reduced == target.eval(x, y)


def moments_report(n: int, x, y, tol=Fraction(1, 10 ** 20),
                   mc_samples: int = 0, seed: int = 0) -> dict:
    """Exact value, partial sum, tail bound and optional Monte Carlo estimate."""
    x, y = _check_params(x, y, allow_zero_x=True)
    law = GeometricLaw.from_params(x, y)
    exact = fubini_gen(n).eval(x, y)
    K = 0 if law.degenerate else cutoff_for(n, x, y, tol)
    partial, bound = moment_partial_sum(n, x, y, K)
    report = {
        "n": n,
        "x": format_rational(x),
        "y": format_rational(y),
        "exact": format_rational(exact),
        "cutoff": K,
        "partial_sum": format_rational(partial),
        "partial_sum_float": float(partial),
        "tail_bound": format_rational(bound) if bound is not None else None,
        "within_bound": bound is not None and abs(exact - partial) <= bound,
        "degenerate": law.degenerate,
    }
    if mc_samples:
        if law.degenerate:
            raise ValueError("Monte Carlo needs x > 0 (p < 1)")
        est = moment_monte_carlo(n, x, y, mc_samples, seed)
        report["mc_estimate"] = est.mean
        report["mc_stderr"] = est.stderr
    return report

"""Memoized Stirling-type triangles.

* ``stirling1(n, k)``: signed first kind, ``s(n+1, k) = s(n, k-1) - n s(n, k)``.
* ``stirling2(n, k)``: classical second kind.
* ``stirling2_r(n, k, r)``: r-Stirling numbers of the second kind (partitions
  of ``n`` elements into ``k`` blocks with the first ``r`` elements in
  distinct blocks).
* ``stirling2_degenerate(n, k, lam)``: degenerate second kind, defined as
  ``n! [t^n] (1/k!) ((1 + lam t)^(1/lam) - 1)^k``.

All values are Fractions.  Tables are filled bottom-up so deep indices never
hit the recursion limit.
"""

from __future__ import annotations

import threading
from fractions import Fraction
from typing import Dict, List, Tuple

from .kernel import as_rational, factorial
from .series import Series


def degenerate_exp_series(lam, order: int, scale=1, var: str = "t") -> Series:
    """``(1 + lam*scale*t)^(1/lam)`` by its coefficient product.

    The n-th coefficient is ``prod_{j<n} (1 - j*lam) * scale^n / n!``, which
    is the exponential ``exp(scale*t)`` when ``lam == 0``.
    """
    lam = as_rational(lam)
    cs = []
    falling = Fraction(1)
    power = 1
    for n in range(order + 1):
        cs.append(falling * power / factorial(n))
        falling *= 1 - n * lam
        power = power * scale
    return Series(cs, order, var)


class StirlingCache:
    """Monotonically growing memo tables for the four triangles.

    Writers hold a lock while extending a table; finished rows are never
    mutated, so readers always see complete values.
    """

    def __init__(self):
        self._lock = threading.RLock()
        self._s1: List[List[Fraction]] = [[Fraction(1)]]
        self._s2r: Dict[int, List[List[Fraction]]] = {}
        # lam -> list of ((b - 1)^k) series coefficient rows, plus the order used
        self._deg: Dict[Fraction, Tuple[int, List[List[Fraction]]]] = {}

    # -- first kind -------------------------------------------------------
    def _grow_s1(self, n: int):
        with self._lock:
            rows = self._s1
            while len(rows) <= n:
                m = len(rows) - 1  # build row m+1 from row m
                prev = rows[m]
                row = [Fraction(0)] * (m + 2)
                for k in range(1, m + 2):
                    left = prev[k - 1]
                    right = prev[k] if k <= m else 0
                    row[k] = left - m * right
                rows.append(row)

    def stirling1(self, n: int, k: int) -> Fraction:
        if n < 0:
            raise ValueError("n must be nonnegative")
        if k < 0 or k > n:
            return Fraction(0)
        if n >= len(self._s1):
            self._grow_s1(n)
        return self._s1[n][k]

    # -- r-Stirling, second kind ------------------------------------------
    def _grow_s2r(self, n: int, r: int):
        with self._lock:
            rows = self._s2r.setdefault(r, [])
            while len(rows) <= n:
                m = len(rows)
                if m < r:
                    row = [Fraction(0)] * (m + 1)
                elif m == r:
                    row = [Fraction(0)] * (m + 1)
                    row[r] = Fraction(1)
                else:
                    prev = rows[m - 1]
                    row = [Fraction(0)] * (m + 1)
                    for k in range(1, m + 1):
                        stay = k * prev[k] if k <= m - 1 else 0
                        row[k] = stay + prev[k - 1]
                rows.append(row)

    def stirling2_r(self, n: int, k: int, r: int = 0) -> Fraction:
        if n < 0 or r < 0:
            raise ValueError("n and r must be nonnegative")
        if k < 0 or k > n:
            return Fraction(0)
        rows = self._s2r.get(r)
        if rows is None or n >= len(rows):
            self._grow_s2r(n, r)
            rows = self._s2r[r]
        return rows[n][k]

    def stirling2(self, n: int, k: int) -> Fraction:
        return self.stirling2_r(n, k, 0)

    # -- degenerate -------------------------------------------------------
    def _degenerate_rows(self, lam: Fraction, n: int) -> List[List[Fraction]]:
        entry = self._deg.get(lam)
        if entry is not None and entry[0] >= n:
            return entry[1]
        with self._lock:
            entry = self._deg.get(lam)
            if entry is not None and entry[0] >= n:
                return entry[1]
            order = max(n, 2 * entry[0] if entry else 8)
            base = degenerate_exp_series(lam, order) - 1
            power = Series.one(order)
            rows = []
            for k in range(order + 1):
                rows.append(list(power.coeffs))
                power = power * base
            self._deg[lam] = (order, rows)
            return rows

    def stirling2_degenerate(self, n: int, k: int, lam) -> Fraction:
        if n < 0:
            raise ValueError("n must be nonnegative")
        if k < 0 or k > n:
            return Fraction(0)
        lam = as_rational(lam)
        rows = self._degenerate_rows(lam, n)
        return rows[k][n] * factorial(n) / factorial(k)


_default = StirlingCache()


def default_cache() -> StirlingCache:
    return _default


def stirling1(n: int, k: int) -> Fraction:
    """Signed Stirling number of the first kind ``s(n, k)``."""
    return _default.stirling1(n, k)


def stirling2(n: int, k: int) -> Fraction:
    """Stirling number of the second kind ``{n k}``."""
    return _default.stirling2(n, k)


def stirling2_r(n: int, k: int, r: int) -> Fraction:
    """r-Stirling number ``{n k}_r``; ``r = 0`` gives the classical triangle."""
    return _default.stirling2_r(n, k, r)


def stirling2_degenerate(n: int, k: int, lam) -> Fraction:
    """Degenerate Stirling number ``{n k}_lam``; ``lam = 0`` is classical."""
    return _default.stirling2_degenerate(n, k, lam)

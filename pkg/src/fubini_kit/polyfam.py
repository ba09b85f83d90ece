"""Polynomial families built on the Stirling triangles.

Polynomials are returned as :class:`BiPoly` values (univariate families live
in ``x`` only).  Frobenius-Euler values are rational in their first argument
with a pole at 1, so they are evaluated pointwise rather than symbolically.
"""

from __future__ import annotations

from enum import Enum
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Dict, List, Tuple

from .kernel import BiPoly, as_rational, binomial, factorial
from .stirling import stirling2, stirling2_degenerate


class PolyFamily(str, Enum):
    GENERALIZED_FUBINI = "fubini-gen"
    FUBINI = "fubini"
    TWO_VAR_FUBINI = "fubini-two-var"
    BELL = "bell"
    EULERIAN = "eulerian"
    FROBENIUS_EULER = "frobenius-euler"
    DEGENERATE_GENERALIZED_FUBINI = "fubini-gen-degenerate"


def _check_index(n: int):
    if n < 0:
        raise ValueError(f"polynomial index must be nonnegative, got {n}")


@lru_cache(maxsize=None)
def fubini_gen(n: int) -> BiPoly:
    """Generalized Fubini polynomial: ``sum_k {n k} k! x^k y^(n-k)``."""
    _check_index(n)
    return BiPoly({(k, n - k): stirling2(n, k) * factorial(k) for k in range(n + 1)})


@lru_cache(maxsize=None)
def fubini_classic(n: int) -> BiPoly:
    """Fubini (ordered Bell) polynomial ``omega_n(x) = sum_k {n k} k! x^k``."""
    _check_index(n)
    return BiPoly({(k, 0): stirling2(n, k) * factorial(k) for k in range(n + 1)})


@lru_cache(maxsize=None)
def fubini_two_var(n: int) -> BiPoly:
    """Two-variable Fubini polynomial with EGF ``e^(ty) / (1 - x(e^t - 1))``.

    Built as the binomial convolution ``sum_k C(n,k) y^k omega_(n-k)(x)``.
    """
    _check_index(n)
    total = BiPoly()
    for k in range(n + 1):
        total = total + binomial(n, k) * BiPoly.monomial(0, k) * fubini_classic(n - k)
    return total


@lru_cache(maxsize=None)
def bell(n: int) -> BiPoly:
    """Bell (Touchard) polynomial ``phi_n(x) = sum_k {n k} x^k``."""
    _check_index(n)
    return BiPoly({(k, 0): stirling2(n, k) for k in range(n + 1)})


@lru_cache(maxsize=None)
def eulerian_triangle(n: int) -> Tuple[int, ...]:
    """Row ``n`` of the Eulerian numbers ``A(n, k)`` (permutations with k descents)."""
    _check_index(n)
    if n == 0:
        return (1,)
    prev = eulerian_triangle(n - 1)
    row = []
    for k in range(n):
        stay = (k + 1) * prev[k] if k < len(prev) else 0
        grow = (n - k) * prev[k - 1] if k >= 1 else 0
        row.append(stay + grow)
    return tuple(row)


def eulerian(n: int) -> BiPoly:
    """Eulerian polynomial ``A_n(x)`` with EGF ``(1-x) / (e^(t(x-1)) - x)``."""
    return BiPoly({(k, 0): a for k, a in enumerate(eulerian_triangle(n))})


def frobenius_euler(n: int, u, y0) -> Fraction:
    """Frobenius-Euler value ``H_n(u; y0)``.

    Uses the denominator-cleared convolution
    ``(1-u) H_n = (1-u) y0^n - sum_{k<n} C(n,k) H_k``.
    """
    _check_index(n)
    u = as_rational(u)
    y0 = as_rational(y0)
    if u == 1:
        raise ValueError("Frobenius-Euler polynomials have a pole at u = 1")
    return frobenius_euler_values(n, u, y0)[n]


def frobenius_euler_values(n_max: int, u, y0) -> List[Fraction]:
    """``[H_0(u; y0), ..., H_{n_max}(u; y0)]``."""
    u = as_rational(u)
    y0 = as_rational(y0)
    if u == 1:
        raise ValueError("Frobenius-Euler polynomials have a pole at u = 1")
    c = 1 - u
    values: List[Fraction] = []
    for n in range(n_max + 1):
        acc = c * y0 ** n
        for k in range(n):
            acc -= binomial(n, k) * values[k]
        values.append(acc / c)
    return values


def fubini_gen_degenerate(n: int, lam) -> BiPoly:
    """Degenerate generalized Fubini polynomial ``sum_k {n k}_lam k! x^k y^(n-k)``."""
    _check_index(n)
    lam = as_rational(lam)
    return BiPoly({(k, n - k): stirling2_degenerate(n, k, lam) * factorial(k)
                   for k in range(n + 1)})


# Symbolic families addressable by name (CLI and reports).
SYMBOLIC_FAMILIES: Dict[str, Callable[[int], BiPoly]] = {
    PolyFamily.GENERALIZED_FUBINI.value: fubini_gen,
    PolyFamily.FUBINI.value: fubini_classic,
    PolyFamily.TWO_VAR_FUBINI.value: fubini_two_var,
    PolyFamily.BELL.value: bell,
    PolyFamily.EULERIAN.value: eulerian,
}


def family(name: str, n: int, lam=None) -> BiPoly:
    """Look up a symbolic family member by its CLI name."""
    if name == PolyFamily.DEGENERATE_GENERALIZED_FUBINI.value:
        return fubini_gen_degenerate(n, 0 if lam is None else lam)
    try:
        return SYMBOLIC_FAMILIES[name](n)
    except KeyError:
        raise ValueError(f"unknown polynomial family {name!r}") from None


def coefficient_rows(n: int, poly: BiPoly):
    """``(n, deg_x, deg_y, coeff)`` rows in graded-lex order."""
    return [(n, i, j, c) for (i, j), c in poly.items()]

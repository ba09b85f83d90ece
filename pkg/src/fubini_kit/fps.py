"""Generating-function oracles built from truncated power series.

Everything here is computed by series arithmetic alone (no Stirling
explicit formulas on the same code path), so the results can be compared
against the closed forms and recurrences elsewhere in the package.
"""

from __future__ import annotations

import os
from fractions import Fraction
from typing import Optional, Sequence

from .kernel import BiPoly, X, Y, as_rational, factorial, is_zero
from .series import Series, exp_linear, geometric, log1p_series
from .stirling import degenerate_exp_series, stirling1
from .transform import SequenceWindow

DEFAULT_ORDER = 12


def default_order() -> int:
    """Truncation order, overridable through ``FUBINI_KIT_DEFAULT_ORDER``."""
    raw = os.environ.get("FUBINI_KIT_DEFAULT_ORDER")
    if raw is None:
        return DEFAULT_ORDER
    try:
        value = int(raw)
    except ValueError:
        raise ValueError(f"FUBINI_KIT_DEFAULT_ORDER must be an integer, got {raw!r}") from None
    if value < 0:
        raise ValueError("FUBINI_KIT_DEFAULT_ORDER must be nonnegative")
    return value


def _coef(value):
    return value if isinstance(value, BiPoly) else as_rational(value)


def _require_nonzero(value, name: str):
    if is_zero(_coef(value)):
        raise ValueError(f"{name} must be nonzero")


def expm1_over(y, order: int, var: str = "t") -> Series:
    """``(e^(t y) - 1) / y`` with coefficients ``y^(n-1)/n!`` (no division by y)."""
    y = _coef(y)
    cs = [Fraction(0)]
    power = Fraction(1)
    for n in range(1, order + 1):
        cs.append(power / factorial(n))
        power = power * y
    return Series(cs, order, var)


def gf_generalized_fubini(order: int, x=X, y=Y) -> Series:
    """Expansion of ``1 / (1 - x (e^(t y) - 1) / y)``.

    With the default indeterminates the coefficients are BiPoly values and
    ``n! [t^n]`` is the generalized Fubini polynomial of degree ``n``.
    """
    x = _coef(x)
    return (1 - expm1_over(y, order).scale(x)).reciprocal()


def gf_degenerate(order: int, lam, x=X, y=Y) -> Series:
    """Expansion of ``1 / (1 - (x/y) ((1 + lam t y)^(1/lam) - 1))``.

    The base series is built from its coefficient product, so ``lam = 0``
    is the ordinary exponential.  Works symbolically (default) or at a
    rational point with ``y != 0``.
    """
    if not isinstance(y, BiPoly):
        _require_nonzero(y, "y")
    x, y = _coef(x), _coef(y)
    lam = as_rational(lam)
    base = degenerate_exp_series(lam, order)
    # (x/y)(b(t y) - 1): the t^n coefficient is x * prod(1 - j lam) * y^(n-1) / n!
    cs = [Fraction(0)]
    power = 1
    for n in range(1, order + 1):
        cs.append(base[n] * power * x)
        power = power * y
    return (1 - Series(cs, order)).reciprocal()


def _initial_ogf(initial: Optional[Sequence], s: int, order: int) -> Series:
    """``A_s(u) = sum_k a[0, k+s] u^k`` truncated to what the data supplies."""
    if initial is None:
        return geometric(1, order, "u")
    initial = SequenceWindow.of(initial)
    vals = list(initial.values[s:])
    if not vals:
        raise ValueError(f"initial row has no terms at or beyond index {s}")
    return Series(vals[: order + 1], order, "u")


def _column_kernel(s: int, order: int, x, y, initial) -> Series:
    """``F(t) = ((e^(ty)-1)/y)^s A_s((x/y)(e^(ty)-1))`` to ``order``."""
    v = expm1_over(y, order)
    u = v.scale(x)
    A = _initial_ogf(initial, s, order)
    return (v ** s) * A.compose(u)


def b_s_operator(s: int, order: int, x, y, initial=None) -> Series:
    """Column-``s`` EGF by the operator form.

    ``(e^(s t y)/s!) (e^(-t y) d/dt)^s [F(t)]``.  With ``initial=None`` the
    all-ones row is used (``A_s(u) = 1/(1-u)``).  For a finite initial row of
    length ``L`` the coefficients are exact only up to ``t^(L-1-s)``.
    """
    _require_nonzero(y, "y")
    x, y = as_rational(x), as_rational(y)
    work = order + s
    F = _column_kernel(s, work, x, y, initial)
    damp = exp_linear(-y, work)
    for _ in range(s):
        F = F.derivative()
        F = damp.truncate(F.order) * F
    out = exp_linear(s * y, F.order) * F
    return out.scale(Fraction(1, factorial(s))).truncate(order)


def b_s_stirling_form(s: int, order: int, x, y, initial=None) -> Series:
    """Column-``s`` EGF as a Stirling-weighted sum of plain derivatives.

    ``(1/s!) sum_k s(s,k) y^(s-k) d^k/dt^k [F(t)]``.  The ``y^(s-k)`` weight
    comes from ``(e^(-ty) D)^s = e^(-sty) D (D - y) ... (D - (s-1) y)``; at
    ``y = 1`` it is the familiar unweighted Stirling sum.
    """
    return _stirling_form(s, order, x, y, initial, weighted=True)


def b_s_stirling_form_unweighted(s: int, order: int, x, y, initial=None) -> Series:
    """``(1/s!) sum_k s(s,k) d^k/dt^k [F(t)]`` exactly as usually displayed.

    Agrees with :func:`b_s_operator` only when ``y = 1``.
    """
    return _stirling_form(s, order, x, y, initial, weighted=False)


def _stirling_form(s, order, x, y, initial, weighted):
    _require_nonzero(y, "y")
    x, y = as_rational(x), as_rational(y)
    work = order + s
    F = _column_kernel(s, work, x, y, initial)
    total = Series([Fraction(0)], order)
    deriv = F
    for k in range(s + 1):
        w = stirling1(s, k) * (y ** (s - k) if weighted else 1)
        if w:
            total = total + deriv.truncate(order).scale(w)
        deriv = deriv.derivative()
    return total.scale(Fraction(1, factorial(s)))


def a_hat_s(s: int, order: int, final, x, y) -> Series:
    """Row-``s`` OGF from the final column.

    ``B_hat_s(w)`` with ``B_hat_s(w) = sum_k a[k+s, 0] w^k/k!`` and
    ``w = ln(1 + t y / x) / y``.
    """
    _require_nonzero(x, "x")
    _require_nonzero(y, "y")
    x, y = as_rational(x), as_rational(y)
    final = SequenceWindow.of(final)
    if len(final) < order + s + 1:
        raise ValueError(
            f"final column too short: need {order + s + 1} terms for order {order}, got {len(final)}")
    b_hat = Series.from_egf(final.values[s: s + order + 1], order, "w")
    w = log1p_series(order).compose(Series([0, y / x], order)).scale(1 / y)
    return b_hat.compose(w)


def operator_identity_sides(n: int, order: int, y):
    """Three expansions in ``x`` of the geometric-series identity.

    1. ``sum_k (x/y)^k (y k)^n``
    2. ``y^n (x d/dx)^n [y / (y - x)]``
    3. ``(y/(y-x)) F_n(x y/(y-x), y)``
    """
    from .polyfam import fubini_gen

    _require_nonzero(y, "y")
    y = as_rational(y)
    direct = Series([(1 / y) ** k * (y * k) ** n for k in range(order + 1)], order, "x")

    geo = geometric(1 / y, order, "x")  # y/(y - x)
    op = geo
    for _ in range(n):
        op = op.euler_operator()
    op = op.scale(y ** n)

    arg = geo.shift(1)  # x y/(y - x) = x * geo
    poly = fubini_gen(n)
    inner = Series([Fraction(0)] * (order + 1), order, "x")
    arg_power = Series.one(order, "x")
    for k in range(n + 1):
        c = poly.coeff(k, n - k)
        if c:
            inner = inner + arg_power.scale(c * y ** (n - k))
        arg_power = arg_power * arg
    lifted = geo * inner
    return direct, op, lifted


def operator_identity_check(n: int, order: int, y) -> bool:
    direct, op, lifted = operator_identity_sides(n, order, y)
    return direct == op == lifted


def derivative_relation_sides(order: int, x, y):
    """``e^(ty) G`` and ``[1/x - (e^(ty)-1)/y] G'`` with ``G = 1/(1 - (x/y)(e^(ty)-1))``."""
    _require_nonzero(x, "x")
    _require_nonzero(y, "y")
    x, y = as_rational(x), as_rational(y)
    G = gf_generalized_fubini(order + 1, x, y)
    lhs = exp_linear(y, order) * G.truncate(order)
    factor = Series.constant(1 / x, order) - expm1_over(y, order)
    rhs = factor * G.derivative()
    return lhs, rhs


def derivative_relation_check(order: int, x, y) -> bool:
    lhs, rhs = derivative_relation_sides(order, x, y)
    return lhs == rhs


def probabilistic_gf(order: int, x, y) -> Series:
    """``(y/(x+y)) / (1 - (x/(x+y)) e^(t y))`` at a rational point."""
    x, y = as_rational(x), as_rational(y)
    if x + y == 0:
        raise ValueError("x + y must be nonzero")
    _require_nonzero(y, "y")
    p = y / (x + y)
    q = x / (x + y)
    return (1 - exp_linear(y, order).scale(q)).reciprocal().scale(p)


def two_var_route_gf(order: int, x, y) -> Series:
    """``e^(-t y^2) sum_n omega_n(x/y, y) (t y)^n / n!`` at a rational point."""
    from .polyfam import fubini_two_var

    _require_nonzero(y, "y")
    x, y = as_rational(x), as_rational(y)
    xs = x / y
    cs = [fubini_two_var(n).eval(xs, y) * y ** n / factorial(n) for n in range(order + 1)]
    return exp_linear(-y * y, order) * Series(cs, order)

"""Named identity checks.

Every check compares two independently computed quantities (a recurrence
against a closed form, a closed form against a series expansion, ...) over a
finite range or a seeded set of random rational points, and returns a
:class:`CheckResult`.  ``run_identity`` / ``run_suite`` are what the ``verify``
CLI subcommand calls.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from typing import Callable, Dict, List, Optional

from . import fps
from .kernel import BiPoly, X, Y, binomial, factorial, format_rational
from .polyfam import (eulerian, frobenius_euler_values, fubini_classic, fubini_gen,
                      fubini_gen_degenerate, fubini_two_var)
from .series import Series, exp_linear, log1p_series
from .stirling import stirling1, stirling2, stirling2_degenerate, stirling2_r
from .stochastic import (cutoff_for, gamma_moment_check, moment_monte_carlo,
                         moment_partial_sum)
from .transform import (backward_fill, bernoulli, chen, row_column_sides, entry_from_column,
                        entry_from_row, forward_fill, fubini_inverse, fubini_transform, ones)


@dataclass
class CheckResult:
    identity: str
    params: dict
    order: int
    passed: bool
    first_mismatch: Optional[dict] = None
    cases: int = 0

    def to_dict(self) -> dict:
        return {
            "identity": self.identity,
            "params": self.params,
            "order": self.order,
            "pass": self.passed,
            "first_mismatch": self.first_mismatch,
            "cases": self.cases,
        }


def _fmt(value) -> str:
    if isinstance(value, BiPoly):
        return str(value)
    if isinstance(value, Series):
        return repr(value)
    if isinstance(value, (list, tuple)):
        return "[" + ", ".join(_fmt(v) for v in value) + "]"
    if isinstance(value, (int, Fraction)):
        return format_rational(value)
    return str(value)


class _Tally:
    """Accumulates comparisons and keeps the first failure."""

    def __init__(self, name: str, order: int, params: dict):
        self.name = name
        self.order = order
        self.params = {k: _fmt(v) if not isinstance(v, (str, int, list)) else v
                       for k, v in params.items()}
        self.cases = 0
        self.mismatch: Optional[dict] = None

    def compare(self, lhs, rhs, **where) -> bool:
        self.cases += 1
        if lhs == rhs:
            return True
        if self.mismatch is None:
            self.mismatch = {"where": {k: _fmt(v) for k, v in where.items()},
                             "lhs": _fmt(lhs), "rhs": _fmt(rhs)}
        return False

    def result(self) -> CheckResult:
        return CheckResult(self.name, self.params, self.order, self.mismatch is None,
                           self.mismatch, self.cases)


# -- random rational points ---------------------------------------------------

def random_rational(rng: random.Random, num: int = 9, den: int = 7) -> Fraction:
    """Small-numerator rational ``p/q`` with ``|p| <= num`` and ``1 <= q <= den``."""
    return Fraction(rng.randint(-num, num), rng.randint(1, den))


def random_point(rng: random.Random, accept: Callable[..., bool], arity: int = 2):
    while True:
        pt = tuple(random_rational(rng) for _ in range(arity))
        if accept(*pt):
            return pt


def random_sequence(rng: random.Random, length: int) -> List[Fraction]:
    return [random_rational(rng) for _ in range(length)]


POINTS = 10


# -- stirling -----------------------------------------------------------------

def check_stirling1_egf(order: Optional[int], rng) -> CheckResult:
    N = 12 if order is None else order
    t = _Tally("stirling1-egf", N, {"n_max": N})
    log = log1p_series(N)
    power = Series.one(N)
    for k in range(N + 1):
        for n in range(k, N + 1):
            t.compare(stirling1(n, k) / factorial(n), power[n] / factorial(k), n=n, k=k)
        power = power * log
    return t.result()


def check_r_stirling_egf(order: Optional[int], rng) -> CheckResult:
    N = 10 if order is None else order
    t = _Tally("r-stirling-egf", N, {"n_max": N, "r_max": 3})
    em1 = exp_linear(1, N) - 1
    for r in range(4):
        er = exp_linear(r, N)
        power = Series.one(N)
        for k in range(N + 1):
            gf = er * power
            for n in range(N + 1):
                t.compare(stirling2_r(n + r, k + r, r) / factorial(n), gf[n] / factorial(k),
                          n=n, k=k, r=r)
            power = power * em1
    return t.result()


def check_r_stirling_shift(order: Optional[int], rng) -> CheckResult:
    # Valid for n >= r; below that the left side vanishes while the right need not.
    N = 12 if order is None else order
    t = _Tally("r-stirling-shift", N, {"n_max": N, "r_max": 4, "domain": "n >= r"})
    for r in range(1, 5):
        for n in range(r, N + 1):
            for k in range(n + 1):
                rhs = stirling2_r(n, k, r - 1) - (r - 1) * (stirling2_r(n - 1, k, r - 1) if n else 0)
                t.compare(stirling2_r(n, k, r), rhs, n=n, k=k, r=r)
    return t.result()


def check_stirling_orthogonality(order: Optional[int], rng) -> CheckResult:
    N = 12 if order is None else order
    t = _Tally("stirling-orthogonality", N, {"n_max": N})
    for n in range(N + 1):
        for m in range(N + 1):
            total = sum((stirling1(n, k) * stirling2(k, m) for k in range(n + 1)), Fraction(0))
            t.compare(total, Fraction(int(n == m)), n=n, m=m)
    return t.result()


def check_degenerate_stirling(order: Optional[int], rng) -> CheckResult:
    N = 12 if order is None else order
    t = _Tally("degenerate-stirling-reduction", N, {"n_max": N})
    for n in range(N + 1):
        for k in range(n + 1):
            t.compare(stirling2_degenerate(n, k, 0), stirling2(n, k), n=n, k=k)
    return t.result()


# -- transform ----------------------------------------------------------------

GRID_X = (Fraction(1), Fraction(-1), Fraction(2, 3))
GRID_Y = (Fraction(1), Fraction(-2), Fraction(1, 2))


def check_row_closed_form(order: Optional[int], rng) -> CheckResult:
    L = 10 if order is None else order
    t = _Tally("closed-form-row", L, {"length": L, "x": list(map(_fmt, GRID_X)),
                                      "y": list(map(_fmt, GRID_Y))})
    for x in GRID_X:
        for y in GRID_Y:
            seq = random_sequence(rng, L)
            grid = forward_fill(seq, x, y)
            for (n, m), v in grid.items():
                t.compare(entry_from_row(n, m, seq, x, y), v, n=n, m=m, x=x, y=y)
    return t.result()


def check_column_closed_form(order: Optional[int], rng) -> CheckResult:
    L = 10 if order is None else order
    t = _Tally("closed-form-column", L, {"length": L, "x": list(map(_fmt, GRID_X)),
                                         "y": list(map(_fmt, GRID_Y))})
    for x in GRID_X:
        for y in GRID_Y:
            seq = random_sequence(rng, L)
            grid = backward_fill(seq, x, y)
            for (n, m), v in grid.items():
                t.compare(entry_from_column(n, m, seq, x, y), v, n=n, m=m, x=x, y=y)
    return t.result()


def check_grid_round_trip(order: Optional[int], rng) -> CheckResult:
    L = 10 if order is None else order
    t = _Tally("grid-round-trip", L, {"length": L})
    for x in GRID_X:
        for y in GRID_Y:
            seq = random_sequence(rng, L)
            back = backward_fill(forward_fill(seq, x, y).column(0), x, y)
            t.compare(back.row(0), seq, x=x, y=y)
    return t.result()


def check_ones_column(order: Optional[int], rng) -> CheckResult:
    N = 8 if order is None else order
    t = _Tally("ones-column-fubini", N, {"n_max": N})
    column = forward_fill(ones(N + 1), X, Y).column(0)
    for n, v in enumerate(column):
        t.compare(v, fubini_gen(n), n=n)
    return t.result()


def check_bernoulli_recurrence(order: Optional[int], rng) -> CheckResult:
    N = 20 if order is None else order
    t = _Tally("bernoulli-recurrence", N, {"n_max": N})
    B = bernoulli(N)
    for n in range(1, N + 1):
        total = sum((binomial(n + 1, k) * B[k] for k in range(n + 1)), Fraction(0))
        t.compare(total, Fraction(0), n=n)
    return t.result()


def _chen_fill(seq: List[Fraction]) -> Dict:
    a = {(0, m): v for m, v in enumerate(seq)}
    L = len(seq)
    for n in range(L - 1):
        for m in range(L - 1 - n):
            a[(n + 1, m)] = -(m + 1) * a[(n, m + 1)] + m * a[(n, m)]
    return a


def check_chen_specialization(order: Optional[int], rng) -> CheckResult:
    L = 10 if order is None else order
    t = _Tally("chen-specialization", L, {"length": L, "x": "-1", "y": "1"})
    for trial in range(5):
        seq = list(chen(L)) if trial == 0 else random_sequence(rng, L)
        expected = _chen_fill(seq)
        grid = forward_fill(seq, -1, 1)
        for nm, v in grid.items():
            t.compare(v, expected[nm], n=nm[0], m=nm[1], trial=trial)
    return t.result()


def check_fubini_round_trip(order: Optional[int], rng) -> CheckResult:
    L = 12 if order is None else order
    zs = (Fraction(1), Fraction(2), Fraction(-1, 2))
    t = _Tally("fubini-transform-round-trip", L, {"length": L, "z": list(map(_fmt, zs))})
    for z in zs:
        for trial in range(4):
            seq = random_sequence(rng, L)
            back = fubini_inverse(fubini_transform(seq, z), z)
            t.compare(list(back), seq, z=z, trial=trial)
    return t.result()


def check_row_column(order: Optional[int], rng) -> CheckResult:
    M = 6 if order is None else order
    t = _Tally("generalized-fubini-transform", M, {"n_max": M, "m_max": M})
    for trial in range(4):
        x, y = random_point(rng, lambda a, b: a != 0 and b != 0)
        seq = random_sequence(rng, 2 * M + 1)
        for n in range(M + 1):
            for m in range(M + 1):
                lhs, rhs = row_column_sides(seq, x, y, n, m)
                t.compare(lhs, rhs, n=n, m=m, x=x, y=y)
    return t.result()


# -- polynomial families ------------------------------------------------------

def check_homogenization(order: Optional[int], rng) -> CheckResult:
    N = 12 if order is None else order
    t = _Tally("homogenization", N, {"n_max": N, "points": POINTS})
    for _ in range(POINTS):
        x, y = random_point(rng, lambda a, b: b != 0)
        for n in range(N + 1):
            F = fubini_gen(n)
            w = fubini_classic(n)
            t.compare(F.eval(x, y), y ** n * w.eval(x / y, 0), n=n, x=x, y=y)
            t.compare(w.eval(x, 0), F.eval(x * y, y) / y ** n, n=n, x=x, y=y, form="inverse")
    return t.result()


def check_bell_integral(order: Optional[int], rng) -> CheckResult:
    N = 12 if order is None else order
    t = _Tally("bell-integral", N, {"n_max": N})
    for n in range(N + 1):
        t.compare(gamma_moment_check(n), True, n=n)
    return t.result()


def check_two_var_relation(order: Optional[int], rng) -> CheckResult:
    N = 10 if order is None else order
    t = _Tally("fubini-two-var-relation", N, {"n_max": N, "points": POINTS})
    for _ in range(POINTS):
        x, y = random_point(rng, lambda a, b: b != 0)
        for n in range(N + 1):
            rhs = y ** n * sum((y ** k * binomial(n, k) * (-1) ** k
                                * fubini_two_var(n - k).eval(x / y, y) for k in range(n + 1)),
                               Fraction(0))
            t.compare(fubini_gen(n).eval(x, y), rhs, n=n, x=x, y=y)
    return t.result()


def check_recurrence_cleared(order: Optional[int], rng) -> CheckResult:
    N = 12 if order is None else order
    t = _Tally("recurrence-cleared", N, {"n_max": N})
    for n in range(N + 1):
        rhs = BiPoly()
        for k in range(n + 1):
            rhs = rhs + binomial(n, k) * Y ** (n - k) * (Y * fubini_gen(k) + fubini_gen(k + 1))
        t.compare((X + Y) * fubini_gen(n + 1), X * rhs, n=n)
    return t.result()


def check_recurrence_convolution(order: Optional[int], rng) -> CheckResult:
    N = 12 if order is None else order
    t = _Tally("recurrence-convolution", N, {"n_max": N})
    for n in range(N + 1):
        conv = BiPoly()
        for k in range(n + 1):
            conv = conv + binomial(n, k) * fubini_gen(k) * fubini_gen(n - k)
        t.compare(fubini_gen(n + 1) + Y * fubini_gen(n), (X + Y) * conv, n=n)
        # y = 1 shadow on the ordinary Fubini polynomials
        conv1 = BiPoly()
        for k in range(n + 1):
            conv1 = conv1 + binomial(n, k) * fubini_classic(k) * fubini_classic(n - k)
        t.compare(fubini_classic(n + 1) + fubini_classic(n), (X + 1) * conv1, n=n, y=1)
    return t.result()


def check_two_point(order: Optional[int], rng) -> CheckResult:
    N = 10 if order is None else order
    t = _Tally("two-point-convolution", N, {"n_max": N, "points": POINTS})
    for _ in range(POINTS):
        x1, x2, y = random_point(rng, lambda a, b, c: a != b, arity=3)
        for n in range(N + 1):
            lhs = sum((binomial(n, k) * fubini_gen(k).eval(x1, y) * fubini_gen(n - k).eval(x2, y)
                       for k in range(n + 1)), Fraction(0))
            rhs = (x2 * fubini_gen(n).eval(x2, y) - x1 * fubini_gen(n).eval(x1, y)) / (x2 - x1)
            t.compare(lhs, rhs, n=n, x1=x1, x2=x2, y=y)
    return t.result()


def check_eulerian_gf(order: Optional[int], rng) -> CheckResult:
    # (e^{t(x-1)} - x) * sum A_n t^n/n! == 1 - x, cleared of the denominator.
    N = 10 if order is None else order
    t = _Tally("eulerian-gf", N, {"n_max": N})
    denom = exp_linear(X - 1, N) - X
    egf = Series.from_egf([eulerian(n) for n in range(N + 1)], N)
    product = denom * egf
    target = Series([1 - X], N)
    for n in range(N + 1):
        t.compare(product[n], target[n], n=n)
    return t.result()


def check_eulerian_bridge(order: Optional[int], rng) -> CheckResult:
    N = 10 if order is None else order
    t = _Tally("eulerian-bridge", N, {"n_max": N, "points": POINTS})
    for _ in range(POINTS):
        x, y = random_point(rng, lambda a, b: a != 0 and b != 0)
        (tt,) = random_point(rng, lambda a: a != 1, arity=1)
        for n in range(N + 1):
            A = eulerian(n)
            F = fubini_gen(n)
            t.compare(F.eval(x, y), x ** n * A.eval(1 + y / x, 0), n=n, x=x, y=y, form="F")
            t.compare(A.eval(tt, 0), ((tt - 1) / y) ** n * F.eval(y / (tt - 1), y),
                      n=n, t=tt, y=y, form="A via y")
            t.compare(A.eval(tt, 0), F.eval(x, x * (tt - 1)) / x ** n,
                      n=n, t=tt, x=x, form="A via x")
    return t.result()


def frobenius_bridge_rhs(n: int, x: Fraction, y: Fraction, u: Fraction) -> Fraction:
    H = frobenius_euler_values(n, u, y)
    return y ** n * sum((y ** k * binomial(n, k) * (-1) ** k * H[n - k] for k in range(n + 1)),
                        Fraction(0))


def check_frobenius_bridge(order: Optional[int], rng) -> CheckResult:
    N = 10 if order is None else order
    t = _Tally("frobenius-euler-bridge", N,
               {"n_max": N, "points": POINTS, "argument": "1 + y/x"})
    for _ in range(POINTS):
        x, y = random_point(rng, lambda a, b: a != 0 and b != 0 and a != -b)
        u = 1 + y / x
        for n in range(N + 1):
            t.compare(fubini_gen(n).eval(x, y), frobenius_bridge_rhs(n, x, y, u), n=n, x=x, y=y)
    return t.result()


def check_frobenius_gf(order: Optional[int], rng) -> CheckResult:
    N = 10 if order is None else order
    t = _Tally("frobenius-euler-gf", N, {"n_max": N, "points": POINTS})
    for _ in range(POINTS):
        u, y0 = random_point(rng, lambda a, b: a != 1)
        gf = (exp_linear(1, N) - u).reciprocal() * exp_linear(y0, N).scale(1 - u)
        values = frobenius_euler_values(N, u, y0)
        for n in range(N + 1):
            t.compare(values[n], gf.egf_coefficient(n), n=n, u=u, y=y0)
    return t.result()


def check_two_var_gf(order: Optional[int], rng) -> CheckResult:
    N = 10 if order is None else order
    t = _Tally("fubini-two-var-gf", N, {"n_max": N})
    gf = exp_linear(Y, N) * (1 - (exp_linear(1, N) - 1).scale(X)).reciprocal()
    for n in range(N + 1):
        t.compare(fubini_two_var(n), gf.egf_coefficient(n), n=n)
    return t.result()


def check_generalized_gf(order: Optional[int], rng) -> CheckResult:
    N = 10 if order is None else order
    t = _Tally("generalized-fubini-gf", N, {"n_max": N})
    gf = fps.gf_generalized_fubini(N)
    for n in range(N + 1):
        t.compare(gf.egf_coefficient(n), fubini_gen(n), n=n)
    return t.result()


DEGENERATE_LAMBDAS = (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(-1, 3))


def check_degenerate_gf(order: Optional[int], rng) -> CheckResult:
    N = 10 if order is None else order
    t = _Tally("degenerate-fubini-gf", N,
               {"n_max": N, "lambda": list(map(_fmt, DEGENERATE_LAMBDAS))})
    for lam in DEGENERATE_LAMBDAS:
        gf = fps.gf_degenerate(N, lam)
        for n in range(N + 1):
            t.compare(gf.egf_coefficient(n), fubini_gen_degenerate(n, lam), n=n, lam=lam)
    return t.result()


# -- series oracles -----------------------------------------------------------

def check_operator_identity(order: Optional[int], rng) -> CheckResult:
    N = 12 if order is None else order
    ys = (Fraction(1), Fraction(2), Fraction(-1, 2))
    t = _Tally("operator-identity", N, {"n_max": 6, "y": list(map(_fmt, ys))})
    for y in ys:
        for n in range(7):
            direct, op, lifted = fps.operator_identity_sides(n, N, y)
            t.compare(direct.coeffs, op.coeffs, n=n, y=y, sides="sum vs operator")
            t.compare(direct.coeffs, lifted.coeffs, n=n, y=y, sides="sum vs polynomial")
    return t.result()


def check_derivative_relation(order: Optional[int], rng) -> CheckResult:
    N = 12 if order is None else order
    t = _Tally("gf-derivative-relation", N, {"points": 1 + 5})
    points = [(Fraction(1), Fraction(1))]
    points += [random_point(rng, lambda a, b: a != 0 and b != 0) for _ in range(5)]
    for x, y in points:
        lhs, rhs = fps.derivative_relation_sides(N, x, y)
        t.compare(lhs.coeffs, rhs.coeffs, x=x, y=y)
    return t.result()


COLUMN_POINTS = ((Fraction(1), Fraction(1)), (Fraction(2, 3), Fraction(-2)),
                 (Fraction(-1), Fraction(1, 2)), (Fraction(3), Fraction(5)),
                 (Fraction(-1, 4), Fraction(-1)))


def check_column_gf(order: Optional[int], rng) -> CheckResult:
    N = 8 if order is None else order
    t = _Tally("column-gf", N, {"s_max": 3, "points": [list(map(_fmt, p)) for p in COLUMN_POINTS]})
    for x, y in COLUMN_POINTS:
        grid = forward_fill(ones(N + 4), x, y)
        for s in range(4):
            op = fps.b_s_operator(s, N, x, y)
            st = fps.b_s_stirling_form(s, N, x, y)
            col = grid.column(s)[: N + 1]
            t.compare(op.egf_coefficients(), col, s=s, x=x, y=y, form="operator")
            t.compare(st.egf_coefficients(), col, s=s, x=x, y=y, form="stirling")
    return t.result()


def check_row_gf(order: Optional[int], rng) -> CheckResult:
    N = 6 if order is None else order
    t = _Tally("row-gf", N, {"s_max": 3, "points": [list(map(_fmt, p)) for p in COLUMN_POINTS]})
    for x, y in COLUMN_POINTS:
        grid = forward_fill(ones(N + 4), x, y)
        final = grid.column(0)
        for s in range(4):
            series = fps.a_hat_s(s, N, final, x, y)
            t.compare(series.coeffs, grid.row(s)[: N + 1], s=s, x=x, y=y)
    return t.result()


def check_probabilistic_gf(order: Optional[int], rng) -> CheckResult:
    N = 10 if order is None else order
    t = _Tally("probabilistic-gf", N, {"points": POINTS})
    for _ in range(POINTS):
        x, y = random_point(rng, lambda a, b: b != 0 and a + b != 0)
        t.compare(fps.probabilistic_gf(N, x, y).coeffs,
                  fps.gf_generalized_fubini(N, x, y).coeffs, x=x, y=y)
    return t.result()


def check_two_var_route(order: Optional[int], rng) -> CheckResult:
    N = 10 if order is None else order
    t = _Tally("fubini-two-var-gf-route", N, {"points": POINTS})
    for _ in range(POINTS):
        x, y = random_point(rng, lambda a, b: b != 0)
        t.compare(fps.two_var_route_gf(N, x, y).coeffs,
                  fps.gf_generalized_fubini(N, x, y).coeffs, x=x, y=y)
    return t.result()


# -- stochastic ---------------------------------------------------------------

MOMENT_POINTS = ((Fraction(1), Fraction(1)), (Fraction(2), Fraction(1)), (Fraction(1), Fraction(3)))
MOMENT_TOL = Fraction(1, 10 ** 20)


def check_moment_partial_sum(order: Optional[int], rng) -> CheckResult:
    N = 6 if order is None else order
    t = _Tally("moment-partial-sum", N, {"n_max": N, "tail_tol": "1e-20",
                                         "points": [list(map(_fmt, p)) for p in MOMENT_POINTS]})
    for x, y in MOMENT_POINTS:
        for n in range(N + 1):
            K = cutoff_for(n, x, y, MOMENT_TOL)
            value, bound = moment_partial_sum(n, x, y, K)
            exact = fubini_gen(n).eval(x, y)
            ok = bound is not None and bound < MOMENT_TOL and abs(exact - value) <= bound
            t.compare(ok, True, n=n, x=x, y=y, K=K)
    return t.result()


def check_moment_monte_carlo(order: Optional[int], rng) -> CheckResult:
    N = 6 if order is None else order
    samples = 10 ** 6
    seed = rng.randrange(2 ** 32)
    t = _Tally("moment-monte-carlo", N, {"n_max": N, "samples": samples, "seed": seed,
                                         "sigma": 5})
    for x, y in MOMENT_POINTS:
        for n in range(N + 1):
            est = moment_monte_carlo(n, x, y, samples, seed)
            exact = float(fubini_gen(n).eval(x, y))
            ok = abs(est.mean - exact) <= 5 * est.stderr
            t.compare(ok, True, n=n, x=x, y=y, estimate=f"{est.mean}+-{est.stderr}")
    return t.result()


REGISTRY: Dict[str, Callable[[Optional[int], random.Random], CheckResult]] = {
    "stirling1-egf": check_stirling1_egf,
    "r-stirling-egf": check_r_stirling_egf,
    "r-stirling-shift": check_r_stirling_shift,
    "stirling-orthogonality": check_stirling_orthogonality,
    "degenerate-stirling-reduction": check_degenerate_stirling,
    "closed-form-row": check_row_closed_form,
    "closed-form-column": check_column_closed_form,
    "grid-round-trip": check_grid_round_trip,
    "ones-column-fubini": check_ones_column,
    "bernoulli-recurrence": check_bernoulli_recurrence,
    "chen-specialization": check_chen_specialization,
    "fubini-transform-round-trip": check_fubini_round_trip,
    "generalized-fubini-transform": check_row_column,
    "homogenization": check_homogenization,
    "bell-integral": check_bell_integral,
    "fubini-two-var-relation": check_two_var_relation,
    "recurrence-cleared": check_recurrence_cleared,
    "recurrence-convolution": check_recurrence_convolution,
    "two-point-convolution": check_two_point,
    "eulerian-gf": check_eulerian_gf,
    "eulerian-bridge": check_eulerian_bridge,
    "frobenius-euler-bridge": check_frobenius_bridge,
    "frobenius-euler-gf": check_frobenius_gf,
    "fubini-two-var-gf": check_two_var_gf,
    "generalized-fubini-gf": check_generalized_gf,
    "degenerate-fubini-gf": check_degenerate_gf,
    "operator-identity": check_operator_identity,
    "gf-derivative-relation": check_derivative_relation,
    "column-gf": check_column_gf,
    "row-gf": check_row_gf,
    "probabilistic-gf": check_probabilistic_gf,
    "fubini-two-var-gf-route": check_two_var_route,
    "moment-partial-sum": check_moment_partial_sum,
    "moment-monte-carlo": check_moment_monte_carlo,
}

SUITES: Dict[str, List[str]] = {
    "stirling": ["stirling1-egf", "r-stirling-egf", "r-stirling-shift",
                 "stirling-orthogonality", "degenerate-stirling-reduction"],
    "transform": ["closed-form-row", "closed-form-column", "grid-round-trip",
                  "ones-column-fubini", "bernoulli-recurrence", "chen-specialization",
                  "fubini-transform-round-trip", "generalized-fubini-transform"],
    "polyfam": ["homogenization", "bell-integral", "fubini-two-var-relation",
                "recurrence-cleared", "recurrence-convolution", "two-point-convolution",
                "eulerian-gf", "eulerian-bridge", "frobenius-euler-bridge",
                "frobenius-euler-gf", "fubini-two-var-gf", "generalized-fubini-gf",
                "degenerate-fubini-gf"],
    "fps": ["operator-identity", "gf-derivative-relation", "column-gf", "row-gf", "probabilistic-gf",
            "fubini-two-var-gf-route"],
    "stochastic": ["moment-partial-sum", "moment-monte-carlo"],
}
SUITES["all"] = [name for names in SUITES.values() for name in names]


def run_identity(name: str, order: Optional[int] = None, seed: int = 0) -> CheckResult:
    try:
        check = REGISTRY[name]
    except KeyError:
        raise ValueError(f"unknown identity {name!r}; choose from {', '.join(REGISTRY)}") from None
    # Each identity gets its own stream so results do not depend on suite order.
    rng = random.Random(f"{seed}:{name}")
    return check(order, rng)


def run_suite(suite: str = "all", order: Optional[int] = None, seed: int = 0) -> List[CheckResult]:
    try:
        names = SUITES[suite]
    except KeyError:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}") from None
    return [run_identity(name, order, seed) for name in names]

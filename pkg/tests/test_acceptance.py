"""Acceptance criteria 1-8.

Run under pytest (a PASS/FAIL line per criterion is printed in the terminal
summary) or directly: ``python3 tests/test_acceptance.py``.
"""

import json
import random
import sys
import time
from fractions import Fraction

import pytest

from fubini_kit.cli import parse_config, run
from fubini_kit.fps import gf_degenerate, gf_generalized_fubini
from fubini_kit.identities import run_identity
from fubini_kit.kernel import X, Y, binomial
from fubini_kit.polyfam import fubini_gen, fubini_gen_degenerate
from fubini_kit.stochastic import cutoff_for, moment_monte_carlo, moment_partial_sum
from fubini_kit.transform import (backward_fill, entry_from_column, entry_from_row,
                                  forward_fill, fubini_inverse, fubini_transform, ones)

RESULTS = {}


def rational(rng):
    return Fraction(rng.randint(-9, 9), rng.randint(1, 7))


def golden_matrix():
    expected = {
        (1, 0): "x", (1, 1): "2*x + y", (1, 2): "3*x + 2*y", (1, 3): "4*x + 3*y",
        (2, 0): "2*x^2 + x*y", (2, 1): "6*x^2 + 6*x*y + y^2", (2, 2): "12*x^2 + 15*x*y + 4*y^2",
        (3, 0): "6*x^3 + 6*x^2*y + x*y^2", (3, 1): "24*x^3 + 36*x^2*y + 14*x*y^2 + y^3",
        (4, 0): "24*x^4 + 36*x^3*y + 14*x^2*y^2 + x*y^3",
    }
    grid = forward_fill(ones(5), X, Y)
    bad = [nm for nm, text in expected.items() if str(grid[nm]) != text]
    return not bad, f"{len(expected)} displayed entries, mismatches: {bad or 'none'}"


def bernoulli_cli():
    report = run(parse_config(["bernoulli", "--n", "20"]))
    rows = [line.split(",") for line in report.text.splitlines()[1:]]
    B = {int(n): Fraction(v) for n, v in rows}
    ok = (report.status == 0 and sorted(B) == list(range(21))
          and B[0] == 1 and B[1] == Fraction(-1, 2) and B[4] == Fraction(-1, 30)
          and all(B[2 * n + 1] == 0 for n in range(1, 10))
          and all(sum(binomial(n + 1, k) * B[k] for k in range(n + 1)) == 0
                  for n in range(1, 21)))
    return ok, "B_0..B_20 from the CLI, recurrence checked for 1 <= n <= 20"


def closed_forms():
    rng = random.Random(2024)
    start = time.perf_counter()
    instances = 0
    for _ in range(100):
        seq = [rational(rng) for _ in range(10)]
        x0 = rational(rng)
        while x0 == 0:
            x0 = rational(rng)
        y0 = rational(rng)
        fwd = forward_fill(seq, x0, y0)
        back = backward_fill(seq, x0, y0)
        for (n, m), v in fwd.items():
            if entry_from_row(n, m, seq, x0, y0) != v:
                return False, f"row closed form differs at {(n, m)}"
        for (n, m), v in back.items():
            if entry_from_column(n, m, seq, x0, y0) != v:
                return False, f"column closed form differs at {(n, m)}"
        instances += 1
    elapsed = time.perf_counter() - start
    return elapsed < 5, f"{instances} instances of length 10 in {elapsed:.2f}s (limit 5s)"


def transform_round_trip():
    rng = random.Random(99)
    count = 0
    for z in (Fraction(1), Fraction(2), Fraction(-1, 2)):
        for _ in range(34):
            seq = [rational(rng) for _ in range(12)]
            if list(fubini_inverse(fubini_transform(seq, z), z)) != seq:
                return False, f"round trip failed at z={z}"
            count += 1
    return count >= 100, f"{count} sequences of length 12, z in {{1, 2, -1/2}}"


def gf_oracle():
    gf = gf_generalized_fubini(10)
    ok = all(gf.egf_coefficient(n) == fubini_gen(n) for n in range(11))
    for lam in (Fraction(0), Fraction(1, 2), Fraction(1), Fraction(-1, 3)):
        dg = gf_degenerate(10, lam)
        ok = ok and all(dg.egf_coefficient(n) == fubini_gen_degenerate(n, lam) for n in range(11))
    return ok, "symbolic n <= 10, degenerate at lambda in {0, 1/2, 1, -1/3}"


SUITE_6 = ["fubini-two-var-relation", "recurrence-cleared", "recurrence-convolution",
           "two-point-convolution", "operator-identity", "gf-derivative-relation", "column-gf", "row-gf",
           "eulerian-bridge", "frobenius-euler-bridge"]


def identity_suite():
    failed = [name for name in SUITE_6 if not run_identity(name, seed=7).passed]
    report = run(parse_config(["verify", "--suite", "all", "--order", "10", "--seed", "7"]))
    payload = json.loads(report.text)
    failed += [r["identity"] for r in payload["results"] if not r["pass"]]
    ok = not failed and report.status == 0
    return ok, f"{len(SUITE_6)} named checks plus verify --suite all (exit {report.status})"


def probabilistic():
    tol = Fraction(1, 10 ** 20)
    worst = 0.0
    for x0, y0 in ((1, 1), (2, 1), (1, 3)):
        for n in range(7):
            exact = fubini_gen(n).eval(x0, y0)
            K = cutoff_for(n, x0, y0, tol)
            value, bound = moment_partial_sum(n, x0, y0, K)
            if bound is None or bound >= tol or abs(exact - value) > bound:
                return False, f"partial sum outside bound at n={n}, (x,y)={(x0, y0)}"
            est = moment_monte_carlo(n, x0, y0, 10 ** 6, seed=20240 + n)
            if est.stderr:
                z = abs(est.mean - float(exact)) / est.stderr
                worst = max(worst, z)
                if z > 5:
                    return False, f"Monte Carlo {z:.2f} SE off at n={n}, (x,y)={(x0, y0)}"
    return True, f"tails < 1e-20 within bound; worst Monte Carlo deviation {worst:.2f} SE"


def cross_triangle():
    names = ["stirling-orthogonality", "r-stirling-shift", "r-stirling-egf", "stirling1-egf"]
    results = [run_identity(name) for name in names]
    failed = [r.identity for r in results if not r.passed]
    orders = {r.identity: r.order for r in results}
    ok = (not failed and orders["stirling-orthogonality"] == 12 and orders["r-stirling-shift"] == 12
          and orders["r-stirling-egf"] == 10 and orders["stirling1-egf"] == 12)
    return ok, f"orthogonality n<=12, shift r<=4 n<=12, r-EGF order 10, first-kind EGF order 12; failed: {failed or 'none'}"


CRITERIA = [
    (1, "golden matrix", golden_matrix),
    (2, "Bernoulli numbers", bernoulli_cli),
    (3, "closed forms vs recurrence", closed_forms),
    (4, "transform round trip", transform_round_trip),
    (5, "GF coefficient oracle", gf_oracle),
    (6, "identity suite", identity_suite),
    (7, "probabilistic representation", probabilistic),
    (8, "cross-triangle checks", cross_triangle),
]


def evaluate(number, title, check):
    ok, detail = check()
    line = f"criterion {number} [{title}]: {'PASS' if ok else 'FAIL'} ({detail})"
    RESULTS[number] = line
    print(line)
    return ok


@pytest.mark.parametrize("number,title,check", CRITERIA, ids=[f"criterion_{c[0]}" for c in CRITERIA])
def test_criterion(number, title, check):
    assert evaluate(number, title, check), RESULTS[number]


if __name__ == "__main__":
    outcomes = [evaluate(*c) for c in CRITERIA]
    sys.exit(0 if all(outcomes) else 1)

from fractions import Fraction

import numpy as np
import pytest

from fubini_kit.kernel import X, Y
from fubini_kit.polyfam import fubini_gen
from fubini_kit.stochastic import (cutoff_for, gamma_moment_check, gamma_moment_reduce,
                                   moment_monte_carlo, moment_partial_sum, moments_report,
                                   sample_geometric, tail_bound)

TOL = Fraction(1, 10 ** 20)


def test_zeroth_moment_is_total_mass():
    value, bound = moment_partial_sum(0, 1, 1, 60)
    assert value <= 1 and 1 - value <= bound


def test_first_moment_at_one_one():
    K = cutoff_for(1, 1, 1, TOL)
    value, bound = moment_partial_sum(1, 1, 1, K)
    assert abs(1 - value) <= bound < TOL


def test_third_moment_at_two_one():
    K = cutoff_for(3, 2, 1, TOL)
    value, bound = moment_partial_sum(3, 2, 1, K)
    exact = fubini_gen(3).eval(2, 1)
    assert bound < TOL and 0 <= exact - value <= bound


def test_tail_bound_not_claimed_too_early():
    assert tail_bound(6, 3, 1, 2) is None


def test_point_mass_at_x_zero():
    report = moments_report(4, 0, 5)
    assert report["degenerate"] and report["tail_bound"] == "0" and report["within_bound"]
    assert moment_partial_sum(0, 0, 2, 0) == (1, 0)
    with pytest.raises(ValueError):
        moment_monte_carlo(2, 0, 1, 100, 0)


def test_invalid_parameters():
    with pytest.raises(ValueError):
        moment_partial_sum(2, 1, -1, 10)
    with pytest.raises(ValueError):
        cutoff_for(2, 1, 1, 0)


def test_monte_carlo_zeroth_moment():
    est = moment_monte_carlo(0, 1, 1, 1000, seed=123)
    assert est.mean == 1.0 and est.stderr == 0.0


def test_monte_carlo_second_moment():
    est = moment_monte_carlo(2, 1, 1, 10 ** 6, seed=7)
    assert abs(est.mean - 3) <= 5 * est.stderr


def test_monte_carlo_is_deterministic():
    a = moment_monte_carlo(3, 2, 1, 10 ** 4, seed=5, shards=4)
    b = moment_monte_carlo(3, 2, 1, 10 ** 4, seed=5, shards=4)
    assert a == b


def test_geometric_sampler_support_and_mean():
    draws = sample_geometric(np.random.default_rng(0), 0.25, 200_000)
    assert draws.min() >= 1
    assert abs(draws.mean() - 4) < 0.05


def test_gamma_reduction():
    assert gamma_moment_reduce(2) == 2 * X ** 2 + X * Y
    for n in range(10):
        assert gamma_moment_check(n)
        assert gamma_moment_check(n, Fraction(2, 3), Fraction(-5, 2))

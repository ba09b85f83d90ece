import random
from fractions import Fraction

import pytest

from fubini_kit import identities
from fubini_kit.identities import REGISTRY, SUITES, _Tally, run_identity, run_suite


@pytest.mark.parametrize("name", sorted(REGISTRY))
def test_identity_passes(name):
    result = run_identity(name, seed=7)
    assert result.passed, result.first_mismatch
    assert result.cases > 0


def test_every_identity_in_a_suite():
    assert sorted(SUITES["all"]) == sorted(REGISTRY)


def test_report_shape():
    report = run_identity("gf-derivative-relation", seed=1).to_dict()
    assert {"identity", "params", "order", "pass", "first_mismatch"} <= set(report)
    assert report["identity"] == "gf-derivative-relation" and report["order"] == 12


def test_seeded_and_order_independent():
    a = run_identity("homogenization", seed=3).to_dict()
    run_identity("two-point-convolution", seed=3)
    b = run_identity("homogenization", seed=3).to_dict()
    assert a == b


def test_first_mismatch_is_recorded():
    tally = _Tally("demo", 4, {"n_max": 4})
    tally.compare(1, 1, n=0)
    tally.compare(Fraction(1, 2), Fraction(1, 3), n=1)
    tally.compare(2, 3, n=2)
    result = tally.result()
    assert not result.passed
    assert result.first_mismatch == {"where": {"n": "1"}, "lhs": "1/2", "rhs": "1/3"}


def test_unknown_names():
    with pytest.raises(ValueError):
        run_identity("nope")
    with pytest.raises(ValueError):
        run_suite("nope")


def test_random_rationals_are_small():
    rng = random.Random(0)
    for _ in range(50):
        q = identities.random_rational(rng)
        assert abs(q.numerator) <= 9 and q.denominator <= 7

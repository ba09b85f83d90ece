from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from conftest import rationals
from fubini_kit.kernel import X
from fubini_kit.series import Series, exp, exp_linear, geometric, log1p, log1p_series

series8 = st.lists(rationals, min_size=9, max_size=9).map(lambda cs: Series(cs, 8))


def test_exp_linear_coefficients():
    assert exp_linear(1, 4).coeffs == [1, 1, Fraction(1, 2), Fraction(1, 6), Fraction(1, 24)]


def test_reciprocal_of_one_minus_t():
    assert (1 - Series.variable(6)).reciprocal() == geometric(1, 6)
    assert geometric(1, 6).coeffs == [1] * 7


def test_log_inverts_exp():
    t = log1p_series(10).compose(exp_linear(1, 10) - 1)
    assert t == Series.variable(10)


def test_exp_of_log():
    s = Series([0, 3, Fraction(-1, 2), 2], 9)
    assert log1p(exp(s) - 1) == s


def test_symbolic_coefficients():
    e = exp_linear(X, 3)
    assert e.egf_coefficient(3) == X ** 3


def test_derivative_drops_order():
    d = exp_linear(2, 5).derivative()
    assert d.order == 4
    assert d == exp_linear(2, 4).scale(2)


def test_reciprocal_needs_unit_constant():
    with pytest.raises(ZeroDivisionError):
        Series([0, 1], 4).reciprocal()


def test_compose_needs_zero_constant():
    with pytest.raises(ValueError):
        exp_linear(1, 4).compose(Series([1, 1], 4))


def test_first_mismatch_reports_index():
    a = Series([1, 2, 3], 2)
    b = Series([1, 2, 4], 2)
    assert a.first_mismatch(b) == 2
    assert a.first_mismatch(a) is None


@given(series8, series8)
def test_leibniz_rule(f, g):
    assert (f * g).derivative() == f.derivative() * g.truncate(7) + f.truncate(7) * g.derivative()


@given(series8, series8)
def test_product_commutes(f, g):
    assert f * g == g * f


@given(series8)
def test_reciprocal_is_inverse(f):
    f = f + (1 - f[0])
    assert f * f.reciprocal() == Series.one(8)

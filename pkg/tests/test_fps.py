from fractions import Fraction

import pytest

from fubini_kit import fps
from fubini_kit.kernel import X, Y
from fubini_kit.polyfam import fubini_gen, fubini_gen_degenerate
from fubini_kit.transform import forward_fill, ones


def test_generalized_gf_coefficients():
    gf = fps.gf_generalized_fubini(10)
    assert gf[0] == 1
    assert gf.egf_coefficient(2) == 2 * X ** 2 + X * Y
    for n in range(11):
        assert gf.egf_coefficient(n) == fubini_gen(n)


@pytest.mark.parametrize("lam", [Fraction(0), Fraction(1, 2), Fraction(1), Fraction(-1, 3)])
def test_degenerate_gf_coefficients(lam):
    gf = fps.gf_degenerate(8, lam)
    for n in range(9):
        assert gf.egf_coefficient(n) == fubini_gen_degenerate(n, lam)


def test_degenerate_gf_reduces_at_lambda_zero():
    x0, y0 = Fraction(2, 3), Fraction(-3)
    assert fps.gf_degenerate(9, 0, x0, y0) == fps.gf_generalized_fubini(9, x0, y0)


def test_degenerate_gf_rejects_zero_y():
    with pytest.raises(ValueError):
        fps.gf_degenerate(4, Fraction(1, 2), 1, 0)


POINTS = [(Fraction(1), Fraction(1)), (Fraction(2, 3), Fraction(-2)), (Fraction(-1), Fraction(1, 2))]


@pytest.mark.parametrize("x0,y0", POINTS)
def test_column_series_match_grid(x0, y0):
    grid = forward_fill(ones(12), x0, y0)
    assert fps.b_s_operator(0, 8, x0, y0) == fps.gf_generalized_fubini(8, x0, y0)
    for s in range(4):
        col = grid.column(s)[:9]
        assert fps.b_s_operator(s, 8, x0, y0).egf_coefficients() == col
        assert fps.b_s_stirling_form(s, 8, x0, y0).egf_coefficients() == col


def test_first_column_at_one_one():
    coeffs = fps.b_s_operator(1, 6, 1, 1).egf_coefficients()
    assert coeffs[0] == 1 and coeffs[1] == 3


def test_unweighted_stirling_form_only_holds_at_y_one():
    for s in (2, 3):
        assert fps.b_s_stirling_form_unweighted(s, 6, Fraction(1, 2), 1) == \
            fps.b_s_operator(s, 6, Fraction(1, 2), 1)
        assert fps.b_s_stirling_form_unweighted(s, 6, 1, -2) != fps.b_s_operator(s, 6, 1, -2)


def test_finite_initial_row_exact_up_to_its_range():
    seq = [Fraction(k * k + 1, k + 2) for k in range(10)]
    x0, y0 = Fraction(3, 2), Fraction(-1, 2)
    grid = forward_fill(seq, x0, y0)
    s = 2
    series = fps.b_s_operator(s, 10 - 1 - s, x0, y0, initial=seq)
    assert series.egf_coefficients() == grid.column(s)


@pytest.mark.parametrize("x0,y0", POINTS)
def test_row_series_match_grid(x0, y0):
    grid = forward_fill(ones(12), x0, y0)
    for s in range(4):
        series = fps.a_hat_s(s, 6, grid.column(0), x0, y0)
        assert series.coeffs == grid.row(s)[:7]


def test_row_series_needs_enough_data():
    with pytest.raises(ValueError, match="too short"):
        fps.a_hat_s(2, 6, [1] * 5, 1, 1)


@pytest.mark.parametrize("y0", [Fraction(1), Fraction(2), Fraction(-1, 2)])
def test_operator_identity(y0):
    for n in range(7):
        assert fps.operator_identity_check(n, 12, y0)
    direct, _, _ = fps.operator_identity_sides(0, 5, y0)
    assert direct.coeffs == [(1 / y0) ** k for k in range(6)]


def test_derivative_relation():
    assert fps.derivative_relation_check(12, 1, 1)
    assert fps.derivative_relation_check(10, Fraction(-3, 4), Fraction(5, 2))
    lhs, rhs = fps.derivative_relation_sides(4, 2, 3)
    assert lhs[0] == rhs[0] == 1


def test_probabilistic_and_two_var_routes():
    for x0, y0 in [(Fraction(1), Fraction(1)), (Fraction(-2, 5), Fraction(3))]:
        target = fps.gf_generalized_fubini(9, x0, y0)
        assert fps.probabilistic_gf(9, x0, y0) == target
        assert fps.two_var_route_gf(9, x0, y0) == target


def test_default_order(monkeypatch):
    monkeypatch.delenv("FUBINI_KIT_DEFAULT_ORDER", raising=False)
    assert fps.default_order() == 12
    monkeypatch.setenv("FUBINI_KIT_DEFAULT_ORDER", "7")
    assert fps.default_order() == 7
    monkeypatch.setenv("FUBINI_KIT_DEFAULT_ORDER", "seven")
    with pytest.raises(ValueError):
        fps.default_order()

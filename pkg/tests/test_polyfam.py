import itertools
from fractions import Fraction

import pytest

from fubini_kit.kernel import X, Y
from fubini_kit.polyfam import (bell, coefficient_rows, eulerian, eulerian_triangle, family,
                                frobenius_euler, frobenius_euler_values, fubini_classic,
                                fubini_gen, fubini_gen_degenerate, fubini_two_var)
from fubini_kit.series import exp_linear


def test_generalized_fubini_small():
    assert fubini_gen(0) == 1
    assert fubini_gen(1) == X
    assert str(fubini_gen(2)) == "2*x^2 + x*y"
    assert str(fubini_gen(3)) == "6*x^3 + 6*x^2*y + x*y^2"
    assert str(fubini_gen(4)) == "24*x^4 + 36*x^3*y + 14*x^2*y^2 + x*y^3"


def test_generalized_fubini_is_homogeneous():
    for n in range(10):
        assert fubini_gen(n).is_homogeneous(n)


def test_fubini_numbers():
    assert [fubini_classic(n).eval(1, 0) for n in range(6)] == [1, 1, 3, 13, 75, 541]
    assert fubini_classic(2) == X + 2 * X ** 2


def test_two_var_fubini():
    assert fubini_two_var(0) == 1
    assert fubini_two_var(1) == X + Y
    for n in range(6):
        assert fubini_two_var(n).eval(X, 0) == fubini_classic(n)


def test_bell_polynomials():
    assert bell(0) == 1
    assert bell(2) == X + X ** 2
    assert bell(3) == X + 3 * X ** 2 + X ** 3


def descents(perm):
    return sum(1 for a, b in zip(perm, perm[1:]) if a > b)


def test_eulerian_by_permutation_descents():
    assert eulerian(0) == 1
    assert eulerian(2) == 1 + X
    assert eulerian(3) == 1 + 4 * X + X ** 2
    for n in range(1, 7):
        counts = [0] * n
        for perm in itertools.permutations(range(n)):
            counts[descents(perm)] += 1
        assert list(eulerian_triangle(n)) == counts


def test_frobenius_euler_values():
    u, y0 = Fraction(1, 3), Fraction(2)
    assert frobenius_euler(0, u, y0) == 1
    assert frobenius_euler(1, u, y0) == y0 - 1 / (1 - u)
    assert frobenius_euler(1, u, y0) == Fraction(1, 2)
    for y0 in (Fraction(0), Fraction(3, 2), Fraction(-2)):
        assert frobenius_euler_values(6, 0, y0) == [(y0 - 1) ** n for n in range(7)]


def test_frobenius_euler_pole():
    with pytest.raises(ValueError):
        frobenius_euler(2, 1, 0)


def test_frobenius_euler_against_series():
    u, y0 = Fraction(-2, 3), Fraction(5, 4)
    gf = (exp_linear(1, 8) - u).reciprocal() * exp_linear(y0, 8).scale(1 - u)
    assert frobenius_euler_values(8, u, y0) == gf.egf_coefficients()


def test_degenerate_family():
    for n in range(6):
        assert fubini_gen_degenerate(n, 0) == fubini_gen(n)
        assert fubini_gen_degenerate(1, Fraction(n, 7)) == X
    assert fubini_gen_degenerate(2, 1) == 2 * X ** 2


def test_family_lookup_and_rows():
    assert family("fubini-gen", 2) == fubini_gen(2)
    assert family("fubini-gen-degenerate", 2, 1) == 2 * X ** 2
    with pytest.raises(ValueError):
        family("nope", 2)
    assert coefficient_rows(2, fubini_gen(2)) == [(2, 2, 0, 2), (2, 1, 1, 1)]


def test_negative_index():
    with pytest.raises(ValueError):
        fubini_gen(-1)

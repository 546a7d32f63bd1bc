from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st

from models.gaussian_rational import I, ONE, ZERO, GaussianRational, gr

rationals = st.fractions(min_value=-100, max_value=100, max_denominator=50)
gaussians = st.builds(GaussianRational, rationals, rationals)
nonzero_gaussians = gaussians.filter(bool)


@given(gaussians, gaussians)
def test_addition_and_multiplication_commute(a, b):
    assert a + b == b + a
    assert a * b == b * a


@given(gaussians, gaussians, gaussians)
def test_multiplication_distributes(a, b, c):
    assert a * (b + c) == a * b + a * c


@given(gaussians, nonzero_gaussians)
def test_division_inverts_multiplication(a, b):
    assert (a * b) / b == a


@given(gaussians, gaussians)
def test_conjugation_is_multiplicative(a, b):
    assert (a * b).conj() == a.conj() * b.conj()
    assert (a * a.conj()).im == 0
    assert (a * a.conj()).re == a.abs2()


def test_imaginary_unit():
    assert I * I == -1
    assert I ** 4 == ONE
    assert I ** -1 == -I
    assert ONE / I == -I


def test_mixed_arithmetic_with_fractions():
    assert gr(1, 2) + 1 == gr(2, 2)
    assert 1 - gr(1, 2) == gr(0, -2)
    assert gr(1, 1) * Fraction(1, 2) == gr("1/2", "1/2")
    assert gr(3) == 3


def test_zero_is_falsy_and_division_by_zero_raises():
    assert not ZERO
    assert gr(0, 1)
    with pytest.raises(ZeroDivisionError):
        gr(1) / ZERO
    with pytest.raises(ZeroDivisionError):
        gr(1) / 0


def test_string_forms():
    assert str(gr(0, 6)) == "6i"
    assert str(gr(Fraction(1, 2))) == "1/2"
    assert str(gr(1, -3)) == "1-3i"
    assert gr(2, 3).to_pair() == ("2", "3")


def test_floats_are_rejected():
    with pytest.raises(TypeError):
        GaussianRational(0.5)

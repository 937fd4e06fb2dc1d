from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from kgdf.poly import (D, DELTA, I, GaussianRational, LaurentPoly1, LaurentPoly2, TruncatedSeries2,
                       a_power, exp_series, gauss, laurent1_to_series, substitute_exponential,
                       substitute_monomial)

from strategies import laurent2, scalars


@given(scalars, scalars, scalars)
def test_scalar_field_axioms(x, y, w):
    assert (x + y) + w == x + (y + w)
    assert x * (y + w) == x * y + x * w
    if x != 0:
        assert x * (1 / x) == 1


def test_gaussian_demotes_to_real():
    assert gauss(3, 0) == 3 and isinstance(gauss(3, 0), int)
    assert I * I == -1
    assert isinstance(I * I, (int, Fraction))
    assert (1 + I) * (1 - I) == 2
    assert GaussianRational(1, 2) / GaussianRational(1, 2) == 1


@given(laurent2(), laurent2(), laurent2())
def test_ring_axioms(p, q, r):
    assert p + q == q + p
    assert p * q == q * p
    assert (p * q) * r == p * (q * r)
    assert p * (q + r) == p * q + p * r
    assert p - p == LaurentPoly2()
    assert p * 1 == p


@given(laurent2(max_terms=5, real=True))
def test_parse_round_trip(p):
    assert LaurentPoly2.parse(str(p)) == p


def test_rendering():
    p = LaurentPoly2.parse("2a^2 - a^4 + a^5 z - a^3 z + a^2 z^2 - a^4 z^2")
    assert str(p) == "2a^2 + a^2 z^2 - a^3 z - a^4 - a^4 z^2 + a^5 z"
    assert str(LaurentPoly2()) == "0"
    assert str(LaurentPoly2.monomial(Fraction(-1, 2), -1, 0)) == "-1/2 a^-1"
    assert LaurentPoly2.parse("2a^-1 − a") == LaurentPoly2({(-1, 0): 2, (1, 0): -1})


def test_json_round_trip():
    p = LaurentPoly2({(2, 0): 2, (-1, 3): Fraction(1, 3), (0, 1): gauss(0, -1)})
    assert LaurentPoly2.from_json(p.to_json()) == p
    assert p.to_json()[0] == {"aExp": -1, "zExp": 3, "re": [1, 3], "im": [0, 1]}


def test_monomial_inverse_and_powers():
    m = LaurentPoly2.monomial(2, 1, -1)
    assert m * m.inverse() == LaurentPoly2.const(1)
    assert m ** -2 == (m * m).inverse()
    with pytest.raises(ValueError):
        (m + 1).inverse()


def test_circle_factors():
    z = LaurentPoly2.monomial(1, 0, 1)
    assert D * z == a_power(1) - a_power(-1) + z
    assert DELTA * z == a_power(1) - a_power(-1)
    assert D.evaluate_a1() == LaurentPoly2.const(1)


def test_series_arithmetic():
    s = exp_series(1, 4)
    assert s * exp_series(-1, 4) == TruncatedSeries2(4, {(0, 0): 1})
    assert s.coefficient(3) == Fraction(1, 6)
    with pytest.raises(ValueError):
        s.coefficient(5)
    with pytest.raises(ValueError):
        s + exp_series(1, 3)


def test_substitute_exponential():
    ser = substitute_exponential(LaurentPoly2.parse("a^2 z - a^-1"), 3)
    assert ser.coefficient(0, 0) == -1
    assert ser.coefficient(1, 0) == 1
    assert ser.coefficient(2, 1) == 2
    assert ser.coefficient(1, 1) == 2
    with pytest.raises(ValueError):
        substitute_exponential(LaurentPoly2.monomial(1, 0, -1))
    with pytest.raises(ValueError):
        substitute_exponential(LaurentPoly2.monomial(I, 1, 0))


@given(st.integers(-5, 5), st.integers(0, 3))
def test_substitute_monomial_is_homomorphic(k, j):
    a_img = LaurentPoly1.monomial(-I, -3)
    z_img = LaurentPoly1({(-1,): -I, (1,): -I})
    p = LaurentPoly2.monomial(1, k, j)
    assert substitute_monomial(p, a_img, z_img) == a_img ** k * z_img ** j


def test_laurent1_series_uses_gaussian_unit():
    # s^4 at s = i e^h is e^{4h}
    ser = laurent1_to_series(LaurentPoly1.monomial(1, 4), I, 3)
    assert ser == exp_series(4, 3)
    ser = laurent1_to_series(LaurentPoly1.monomial(1, 2), I, 2)
    assert ser == exp_series(2, 2) * -1

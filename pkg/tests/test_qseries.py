from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from gwseries.qseries import (
    NotInvertibleError, OrderMismatchError, Series, add, div, even_part, mul, odd_part,
    product_power, rational_from_str, rational_to_str, substitute_power, theta,
)

from oracles import (
    E1_GENUS0, K3_GENUS0, euler_product_power, jacobi_cube_series, partitions_count,
    pentagonal_series,
)

ORDER = 12

rationals = st.fractions(min_value=-50, max_value=50, max_denominator=12)


@st.composite
def series(draw, order=ORDER, unit=False):
    cs = draw(st.lists(rationals, min_size=order + 1, max_size=order + 1))
    if unit:
        cs[0] = draw(rationals.filter(bool))
    return Series(cs, order)


def S(*cs, order=None):
    return Series(cs, order)


# -- construction and basic invariants

def test_rational_storage_is_lowest_terms():
    s = Series([Fraction(6, -4), 2], 3)
    assert s[0] == Fraction(-3, 2)
    assert s[0].denominator == 2
    assert len(s.coeffs) == s.order + 1 == 4


def test_float_coefficients_rejected():
    with pytest.raises(TypeError):
        Series([0.5])


def test_equality_requires_same_order():
    assert S(1, 1) != Series([1, 1], 2)
    assert S(1, 1) == Series([1, 1], 1)


def test_index_past_truncation_raises():
    with pytest.raises(IndexError):
        S(1, 2)[2]


# -- add

def test_add_examples():
    assert S(1, 1) + Series.zero(1) == S(1, 1)
    assert S(1, 2) + S(3, 4) == S(4, 6)
    g = S(0, 1, 3, 4, 7)
    assert (g + (-g)).is_zero()
    assert add(S(1, 2), S(3, 4)) == S(4, 6)


def test_add_order_mismatch():
    with pytest.raises(OrderMismatchError):
        S(1, 2) + S(1, 2, 3)


# -- mul

def test_mul_examples():
    a = S(3, -1, Fraction(1, 2), 7)
    assert a * Series.one(3) == a
    assert S(1, 1, 0) * S(1, 1, 0) == S(1, 2, 1)
    N = 10
    geometric = Series([1] * (N + 1), N)
    assert mul(Series([1, -1], N), geometric) == Series.one(N)


def test_mul_order_mismatch():
    with pytest.raises(OrderMismatchError):
        mul(S(1, 2), S(1, 2, 3))


def test_scalar_multiplication():
    assert 3 * S(1, 2) == S(3, 6)
    assert S(1, 2) * Fraction(1, 2) == S(Fraction(1, 2), 1)


# -- div

def test_div_examples():
    N = 8
    assert div(Series.one(N), Series([1, -1], N)) == Series([1] * (N + 1), N)
    a = Series([2, 5, -1, 3], N)
    assert a / a == Series.one(N)
    g = Series([0, 1, 3, 4, 7], N)
    assert g / Series.one(N) == g


def test_div_zero_constant_term():
    with pytest.raises(NotInvertibleError):
        div(S(1, 2, 3), S(0, 1, 0))


# -- theta

def test_theta_examples():
    assert theta(Series.constant(5, 4)).is_zero()
    for k in range(5):
        assert theta(Series.monomial(k, 4)) == Series.monomial(k, 4, k)
    assert theta(S(1, 12, 90)) == S(0, 12, 180)


# -- substitute_power

def test_substitute_power_examples():
    a = S(1, 2, 3, 4)
    assert substitute_power(a, 1) == a
    assert substitute_power(S(1, 1, 0), 2) == S(1, 0, 1)
    f2 = substitute_power(product_power(-24, 6), 2)
    assert f2 == S(1, 0, 24, 0, 324, 0, 3200)


def test_substitute_power_rejects_nonpositive():
    with pytest.raises(ValueError):
        substitute_power(S(1, 2), 0)


# -- product_power against the independent oracle

def test_product_power_trivial_exponent():
    assert product_power(0, 7) == Series.one(7)


@pytest.mark.parametrize("e", [-24, -12, -3, -1, 1, 2, 3, 5])
def test_product_power_matches_oracle(e):
    assert list(product_power(e, 20)) == euler_product_power(e, 20)


def test_product_power_frozen_values():
    assert list(product_power(-12, 4)) == [1, 12, 90, 520, 2535]
    assert list(product_power(-24, 3)) == [1, 24, 324, 3200]
    assert list(product_power(-12, 20)) == E1_GENUS0
    assert list(product_power(-24, 20)) == K3_GENUS0


def test_product_power_classical_identities():
    assert list(product_power(1, 40)) == pentagonal_series(40)
    assert list(product_power(3, 40)) == jacobi_cube_series(40)
    assert list(product_power(-1, 15)) == [partitions_count(m) for m in range(16)]


# -- even / odd

def test_even_odd_examples():
    assert even_part(S(0, 1)).is_zero()
    g2 = Series([Fraction(-1, 24), 1, 3, 4, 7], 4)
    assert odd_part(g2)[1] == 1
    assert even_part(g2)[0] == Fraction(-1, 24)


# -- serialization

def test_rational_strings():
    assert rational_to_str(Fraction(-1, 24)) == "-1/24"
    assert rational_to_str(Fraction(6, 3)) == "2"
    assert rational_from_str("-2/3") == Fraction(-2, 3)
    assert rational_from_str("10/4") == Fraction(5, 2)


def test_series_json_roundtrip():
    s = Series([Fraction(-1, 24), 1, 3, Fraction(5, 7)], 3)
    text = s.to_json()
    assert text == '["-1/24", "1", "3", "5/7"]'
    assert Series.from_json(text) == s


# -- ring properties

@settings(max_examples=40, deadline=None)
@given(series(), series(), series())
def test_ring_axioms(a, b, c):
    assert (a + b) + c == a + (b + c)
    assert a + b == b + a
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert a * (b + c) == a * b + a * c


@settings(max_examples=40, deadline=None)
@given(series(), series())
def test_leibniz_rule(a, b):
    assert theta(a * b) == theta(a) * b + a * theta(b)


@settings(max_examples=40, deadline=None)
@given(series(), series(unit=True))
def test_div_inverts_mul(a, b):
    assert div(mul(a, b), b) == a


@settings(max_examples=40, deadline=None)
@given(series(), series(), st.integers(1, 5))
def test_substitute_power_is_ring_homomorphism(a, b, k):
    assert substitute_power(a * b, k) == substitute_power(a, k) * substitute_power(b, k)
    assert substitute_power(a + b, k) == substitute_power(a, k) + substitute_power(b, k)


@settings(max_examples=40, deadline=None)
@given(series(), series())
def test_even_odd_decomposition(a, b):
    assert even_part(a) + odd_part(a) == a
    ev, od = even_part(a), odd_part(b)
    assert odd_part(ev * od) == ev * od
    assert even_part(ev * even_part(b)) == ev * even_part(b)


@pytest.mark.parametrize("e", [-24, -12, -1, 1, 7])
def test_product_power_inverse_pair(e):
    assert product_power(e, 30) * product_power(-e, 30) == Series.one(30)

from fractions import Fraction

import pytest
from hypothesis import given
from hypothesis import strategies as st
from strategies import scalars

from yhe.scalars import (
    Cyclo,
    RatFunc,
    Scalar,
    UsageError,
    cyclotomic_poly,
    format_scalar,
    laurent_gcd,
    parse_scalar,
    quantum_integer,
    scalar_invert,
)


def test_cyclotomic_polynomials():
    assert cyclotomic_poly(1) == (-1, 1)
    assert cyclotomic_poly(2) == (1, 1)
    assert cyclotomic_poly(3) == (1, 1, 1)
    assert cyclotomic_poly(4) == (1, 0, 1)
    assert cyclotomic_poly(6) == (1, -1, 1)


@pytest.mark.parametrize("r", [1, 2, 3, 4, 5, 6])
def test_root_of_unity_has_order_r(r):
    z = Cyclo.z_power(r, 1)
    acc = Cyclo.rational(r, 1)
    for k in range(1, r + 1):
        acc = acc * z
        assert (acc == 1) == (k == r)


@pytest.mark.parametrize("r", [2, 3, 4, 5])
def test_sum_of_powers_of_root_vanishes(r):
    total = Cyclo.rational(r, 0)
    for k in range(r):
        total = total + Cyclo.z_power(r, k)
    assert total.is_zero()


def test_cube_root_identity():
    # 1 + z + z^2 = 0 for a primitive cube root
    z = Scalar.z(3)
    assert 1 + z + z * z == 0
    assert z ** 3 == 1


def test_q_units():
    q = Scalar.q(2)
    assert q * Scalar.q(2, -1) == 1
    assert q.is_unit()
    assert not (q + 1).is_unit()
    assert Scalar.monomial(3, Fraction(2, 3), 4, 1).inverse() == Scalar.monomial(3, Fraction(3, 2), -4, -1)


def test_non_unit_inverse_is_a_rational_function():
    x = Scalar.q(1) + 1
    inv = scalar_invert(x)
    assert isinstance(inv, RatFunc)
    assert inv * x == 1
    with pytest.raises(ZeroDivisionError):
        scalar_invert(Scalar.zero(1))


def test_quantum_integer():
    q = Scalar.q(1)
    assert quantum_integer(1, 3) == 1 + q ** 2 + q ** 4


def test_laurent_gcd():
    q = Scalar.q(1)
    a = (q - 1) * (q + 2)
    b = (q - 1) * (q + 3)
    g = laurent_gcd(a, b)
    assert RatFunc(g, q - 1).is_polynomial()


def test_ratfunc_normalizes():
    q = Scalar.q(1)
    x = RatFunc(q * q - 1, q - 1)
    assert x.is_polynomial() and x.to_scalar() == q + 1
    y = RatFunc(Scalar.one(1), q + 1)
    assert not y.is_polynomial()
    with pytest.raises(UsageError):
        y.to_scalar()
    assert y + y == RatFunc(Scalar.from_rational(1, 2), q + 1)


def test_format_examples():
    q = Scalar.q(1)
    assert format_scalar(q - Scalar.q(1, -1)) == "q - q^-1"
    assert format_scalar(Scalar.zero(2)) == "0"
    assert format_scalar(Scalar.monomial(5, Fraction(-1, 2), -3, 2)) == "-1/2*z^2*q^-3"
    assert format_scalar(Scalar.z(3, 2)) == "-1 - z"


def test_parse_errors():
    with pytest.raises(UsageError):
        parse_scalar("", 2)
    with pytest.raises(UsageError):
        parse_scalar("q +", 2)
    with pytest.raises(UsageError):
        parse_scalar("2*x", 2)


def test_mismatched_r():
    with pytest.raises(UsageError):
        Scalar.q(2) + Scalar.q(3)


@given(scalars(), st.data())
def test_format_parse_round_trip(a, data):
    assert parse_scalar(format_scalar(a), a.r) == a


@given(st.data())
def test_ring_axioms(data):
    r = data.draw(st.sampled_from([1, 2, 3, 5]))
    a, b, c = (data.draw(scalars(r)) for _ in range(3))
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c
    assert a * b == b * a
    assert a - a == 0
    assert a * 1 == a


@given(st.data())
def test_cyclotomic_inverse(data):
    r = data.draw(st.sampled_from([2, 3, 4, 5, 6]))
    coeffs = data.draw(st.lists(st.integers(-4, 4), min_size=len(Cyclo.rational(r, 1).coeffs),
                                max_size=len(Cyclo.rational(r, 1).coeffs)))
    x = Cyclo(r, coeffs)
    if x.is_zero():
        return
    assert x * x.inverse() == 1


@given(st.data())
def test_bar_is_an_involutive_ring_map(data):
    r = data.draw(st.sampled_from([1, 2, 3]))
    a, b = data.draw(scalars(r)), data.draw(scalars(r))
    assert a.bar().bar() == a
    assert (a * b).bar() == a.bar() * b.bar()


@given(st.data())
def test_ratfunc_field_operations(data):
    a = data.draw(scalars(1))
    b = data.draw(scalars(1))
    if b.is_zero():
        return
    x = RatFunc(a, b)
    assert x * b == a
    if not a.is_zero():
        assert x * x.inverse() == 1

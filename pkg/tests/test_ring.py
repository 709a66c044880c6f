from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from rmbispec.ring import (
    ZERO, EpsLaurent, approx, parse_rat, pole_order, q_power_of, rat_str, working_precision,
)

rationals = st.builds(Fraction, st.integers(-30, 30), st.integers(1, 20))


def test_exact_field_ops():
    assert Fraction(1, 3) + Fraction(1, 6) == Fraction(1, 2)
    assert Fraction(2, 7) ** -2 == Fraction(49, 4)


def test_rational_serialization():
    assert rat_str(Fraction(6, 4)) == "3/2"
    assert rat_str(Fraction(-3)) == "-3/1"
    assert parse_rat("-6/4") == Fraction(-3, 2)
    assert parse_rat("0.3") == Fraction(3, 10)


@given(rationals)
def test_rat_str_roundtrip(x):
    assert parse_rat(rat_str(x)) == x


def test_inverse_of_eps_minus_eps2():
    w = (-3, 3)
    e = EpsLaurent.eps(w)
    inv = (e - e * e).inverse()
    assert inv.prec == 3
    assert {k: inv.coeff(k) for k in range(-3, 3)} == {-3: 0, -2: 0, -1: 1, 0: 1, 1: 1, 2: 1}
    # long division oracle: the product is 1 up to the known precision
    prod = (e - e * e) * inv
    assert prod.coeff(0) == 1
    assert all(prod.coeff(k) == 0 for k in range(-3, prod.prec) if k != 0)


@pytest.mark.parametrize("value,order", [
    (lambda e: 1 / e + 2, -1),
    (lambda e: 5 + 3 * e, 0),
    (lambda e: e * e - e * e, ZERO),
])
def test_pole_order_examples(value, order):
    assert pole_order(value(EpsLaurent.eps())) == order


def test_floor_saturation_flagged():
    e = EpsLaurent.eps((-1, 1))
    v = e.inverse() * e.inverse()
    assert v.floor_saturated
    assert not e.inverse().saturated


def test_window_mismatch():
    with pytest.raises(ValueError):
        EpsLaurent.eps((-2, 2)) + EpsLaurent.eps((-3, 3))


def laurent(coeffs):
    return EpsLaurent({e: c for e, c in zip(range(-1, 3), coeffs)})


laurents = st.lists(rationals, min_size=4, max_size=4).map(laurent)


@given(laurents, laurents, laurents)
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) + c == a + (b + c)
    assert (a * b) * c == a * (b * c)
    assert a * (b + c) == a * b + a * c


@given(laurents)
def test_inverse_roundtrip_lowest_term(a):
    if a.valuation() is None:
        return
    r = a * a.inverse()
    assert r.coeff(0) == 1
    top = r.hi + 1 if r.prec is None else r.prec
    assert all(r.coeff(k) == 0 for k in range(r.lo, top) if k != 0)


@given(st.integers(-40, 40), st.sampled_from([Fraction(2, 7), Fraction(-1, 3), Fraction(3, 5)]))
def test_q_power_detection(m, q):
    assert q_power_of(q ** m, q) == m
    assert q_power_of(q ** m * Fraction(11, 13), q) is None


def test_working_precision_scoped():
    import mpmath
    before = mpmath.mp.prec
    with working_precision(400):
        assert mpmath.mp.prec == 400
        x = approx(Fraction(1, 3))
    assert mpmath.mp.prec == before
    assert abs(x * 3 - 1) < mpmath.mpf(2) ** -390

from fractions import Fraction

import pytest
from hypothesis import assume, given, settings, strategies as st

from rmbispec import transforms as tf
from rmbispec.qseries import NonGenericError

q = Fraction(2, 7)
generic = st.builds(Fraction, st.integers(-40, 40).filter(bool), st.sampled_from([11, 13, 17, 19, 23]))


def sides(fn, *args):
    try:
        return fn(*args)
    except (ZeroDivisionError, NonGenericError):
        assume(False)


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3), generic, generic, generic, generic, generic)
def test_vwp_root_reduction(theta, a, f, e1, e2, z):
    lhs, rhs = sides(tf.vwp_root_reduction_sides, theta, a, f, [e1, e2], z, q)
    assert lhs == rhs


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 3), generic, generic, generic, generic, generic)
def test_w10_to_5phi4(theta, a, c, d, e, f):
    lhs, rhs = sides(tf.w10_to_5phi4_sides, theta, a, c, d, e, f, q)
    assert lhs == rhs


@settings(max_examples=10, deadline=None)
@given(st.integers(0, 2), generic, generic, generic, generic, generic, generic)
def test_order_exchange(theta, a, c, d, e, f, g):
    lhs, rhs = sides(tf.order_exchange_sides, theta, a, c, d, e, f, g, q)
    assert lhs == rhs


def test_fixed_draws_and_negative_control():
    vals = (Fraction(-2, 11), Fraction(-1, 31), Fraction(-4, 17), Fraction(-8, 29), Fraction(-9, 19))
    lhs, rhs = tf.vwp_root_reduction_sides(3, vals[0], vals[1], vals[2:4], vals[4], q)
    assert lhs == rhs
    # the reduction is not an identity in the square-root pair
    from rmbispec.qseries import bhs_vwp
    a, f = vals[0], vals[1]
    wrong = bhs_vwp(a, [q ** -3, q ** 3 * a * f] + list(vals[2:4]), q, vals[4],
                    square_pairs=(a * q / f, a * q * q * q / f))
    assert wrong != rhs


@pytest.mark.parametrize("theta,rho", [(a, b) for a in range(4) for b in range(4)])
def test_n3_w14(P, theta, rho):
    s = [Fraction(1), Fraction(1, 5), Fraction(1, 55)]
    lhs, rhs = tf.n3_w14_sides(theta, rho, s, P)
    assert lhs == rhs


def test_n3_w14_parameters(P):
    v = tf.n3_w14_parameters(0, [1, Fraction(1, 5), Fraction(1, 55)], P)
    assert v["f"] == P.q / P.t
    assert v["g"] == 1

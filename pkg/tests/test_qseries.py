from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, strategies as st

from rmbispec.qseries import (
    HypergeometricSpec, NonGenericError, NonTerminatingError, Params, bhs_phi, bhs_vwp,
    euler_expand, qbinomial_expand, qpoch, qpoch_inf, saalschutz_sides, theta,
)
from rmbispec.ring import working_precision

q3 = Fraction(1, 3)


def test_qpoch_examples():
    assert qpoch(Fraction(5, 7), q3, 0) == 1
    assert qpoch(Fraction(1, 2), q3, 2) == Fraction(5, 12)
    assert qpoch(Fraction(1, 2), q3, -1) == -2


def test_qpoch_negative_pole():
    with pytest.raises(ZeroDivisionError):
        qpoch(q3, q3, -1)


@given(st.integers(-6, 6), st.integers(-6, 6),
       st.sampled_from([Fraction(2, 11), Fraction(-5, 13), Fraction(7, 3)]))
def test_qpoch_splits(k, m, z):
    q = Fraction(2, 7)
    assert qpoch(z, q, k + m) == qpoch(z, q, k) * qpoch(z * q ** k, q, m)


def test_qpoch_inf_examples():
    assert qpoch_inf(0, Fraction(1, 2), 1e-30) == 1
    v = qpoch_inf(0.5, 0.5, 1e-30)
    with mpmath.workprec(512):
        ref = mpmath.qp(mpmath.mpf(1) / 2, mpmath.mpf(1) / 2)
    assert mpmath.nstr(v, 13) == "0.2887880950866"
    assert abs(v - ref) < 1e-30


@pytest.fixture
def prec256():
    with working_precision(256):
        yield


def test_qpoch_inf_euler(prec256):
    z, q = mpmath.mpf("0.3"), mpmath.mpf("0.25")
    series = mpmath.mpf(0)
    k = 0
    while True:
        term = z ** k / qpoch(q, q, k)
        series += term
        if term < mpmath.mpf(10) ** -60:
            break
        k += 1
    assert abs(1 / qpoch_inf(z, q) - series) < 1e-25


def test_qpoch_inf_tolerance_unreachable():
    with pytest.raises(ValueError):
        qpoch_inf(0.5, 0.5, mpmath.mpf(10) ** -200)


def test_theta_examples(prec256):
    q = mpmath.mpf("0.3")
    assert theta(q, q) == 0
    z = mpmath.mpf("0.4")
    assert abs(theta(z, q) - theta(q / z, q)) < 1e-60
    z, q = mpmath.mpf("0.5"), mpmath.mpf(1) / 3
    assert abs(theta(q * z, q) + theta(z, q) / z) < 1e-60
    with pytest.raises(ValueError):
        theta(0, q)


def test_bhs_phi_trivial():
    q = Fraction(2, 7)
    assert bhs_phi(HypergeometricSpec((q ** -3, Fraction(1, 5)), (Fraction(3, 11),), 0), q) == 1
    assert bhs_phi(HypergeometricSpec((1, q ** -3), (Fraction(3, 11),), Fraction(5, 2)), q) == 1


def test_bhs_phi_three_terms():
    q, b, c, z = q3, Fraction(1, 2), Fraction(1, 5), Fraction(2, 7)
    a = q ** -2
    t1 = (1 - a) * (1 - b) / ((1 - q) * (1 - c)) * z
    t2 = t1 * (1 - a * q) * (1 - b * q) / ((1 - q * q) * (1 - c * q)) * z
    got = bhs_phi(HypergeometricSpec((a, b), (c,), z), q)
    assert got == 1 + t1 + t2 == Fraction(239, 2744)


def test_bhs_phi_needs_termination():
    with pytest.raises(NonTerminatingError):
        bhs_phi(HypergeometricSpec((Fraction(1, 5), Fraction(1, 7)), (Fraction(1, 11),),
                                   Fraction(1, 2)), q3)


def test_bhs_phi_truncated_and_adaptive(prec256):
    q = mpmath.mpf("0.3")
    z = mpmath.mpf("0.2")
    # 1phi0(0;;q,z) = 1/(z;q)_oo
    adaptive = bhs_phi(HypergeometricSpec((0,), (), z, mode="adaptive"), q)
    assert abs(adaptive - 1 / qpoch_inf(z, q)) < 1e-60
    trunc = bhs_phi(HypergeometricSpec((0,), (), z, mode="truncated", N=1), q)
    assert abs(trunc - (1 + z / (1 - q))) < 1e-70


def test_bhs_vwp_examples():
    q = q3
    assert bhs_vwp(Fraction(2, 11), [Fraction(3, 13), q ** -2], q, 0) == 1
    assert bhs_vwp(Fraction(2, 11), [1, Fraction(3, 13)], q, Fraction(1, 2)) == 1
    A = Fraction(2, 11)
    rest = [Fraction(3, 13), Fraction(5, 17), Fraction(7, 19), q ** -1, Fraction(4, 23)]
    z = Fraction(1, 7)
    term = (1 - A * q * q) / (1 - q)
    for r in rest:
        term *= (1 - r) / (1 - A * q / r)
    assert bhs_vwp(A, rest, q, z) == 1 + term * z == Fraction(249708480371, 403403841971)


def test_bhs_vwp_square_pairs_match_roots():
    # with a perfect square B the paired form agrees with +-sqrt(B) entered directly
    q = Fraction(1, 4)
    a = Fraction(9, 25)
    r = Fraction(3, 7)
    paired = bhs_vwp(a, [q ** -3, Fraction(2, 11)], q, Fraction(1, 3), square_pairs=(r * r,))
    direct = bhs_vwp(a, [q ** -3, Fraction(2, 11), r, -r], q, Fraction(1, 3))
    assert paired == direct


def test_euler_expand():
    q, c = Fraction(2, 7), Fraction(3, 5)
    assert euler_expand(c, q, "+", 4)[0] == 1 == euler_expand(c, q, "-", 4)[0]
    assert euler_expand(c, q, "-", 3)[1] == c / (1 - q)
    plus, minus = euler_expand(c, q, "+", 5), euler_expand(c, q, "-", 5)
    conv = [sum(plus[i] * minus[k - i] for i in range(k + 1)) for k in range(6)]
    assert conv == [1, 0, 0, 0, 0, 0]


def test_qbinomial_expand_matches_ratio():
    q, a, c = Fraction(2, 7), Fraction(3, 5), Fraction(1, 3)
    lhs = qbinomial_expand(a, c, q, 5)
    # (a c m)_oo * 1/(c m)_oo convolved
    num = euler_expand(a * c, q, "+", 5)
    den = euler_expand(c, q, "-", 5)
    assert lhs == [sum(num[i] * den[k - i] for i in range(k + 1)) for k in range(6)]


@pytest.mark.parametrize("n", range(6))
def test_saalschutz(n):
    lhs, rhs = saalschutz_sides(n, Fraction(2, 11), Fraction(5, 13), Fraction(7, 17), q3)
    assert lhs == rhs


def test_params_validation():
    assert Params(Fraction(2, 7), Fraction(3, 5), generic=True).generic
    with pytest.raises(NonGenericError):
        Params(Fraction(2, 7), Fraction(4, 5), generic=True)
    with pytest.raises(ValueError):
        Params(Fraction(3, 2), Fraction(1, 5))
    with pytest.raises(ValueError):
        Params(Fraction(1, 2), Fraction(0))


def test_params_dual():
    P = Params(Fraction(2, 7), Fraction(3, 5), generic=True)
    D = P.dual()
    assert D.t == Fraction(10, 21)
    assert D.dual().t == P.t


def test_float_backend_scalars():
    P = Params(Fraction(2, 7), Fraction(3, 5), backend="float", precision=128)
    assert isinstance(P.sq(), mpmath.mpf)

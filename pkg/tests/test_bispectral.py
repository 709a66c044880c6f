import itertools
from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st

from rmbispec import bispectral as bs
from rmbispec.mps import TruncSeries, apply_poch
from rmbispec.qseries import Params, qpoch
from rmbispec.ring import ZERO, EpsLaurent, working_precision

UT = bs.UpperTri


def test_enumerate_small():
    assert bs.enumerate_Mn(1, 5) == [UT(1)]
    assert [th.entries for th in bs.enumerate_Mn(2, 2)] == [(0,), (1,), (2,)]


@pytest.mark.parametrize("n,Dz", [(3, 2), (3, 4), (4, 3)])
def test_enumerate_brute_force(n, Dz):
    pairs = UT.pairs(n)
    brute = set()
    for ent in itertools.product(range(Dz + 1), repeat=len(pairs)):
        if sum(v * (j - i) for v, (i, j) in zip(ent, pairs)) <= Dz:
            brute.add(ent)
    got = [th.entries for th in bs.enumerate_Mn(n, Dz)]
    assert len(got) == len(set(got)) == len(brute)
    assert set(got) == brute
    if (n, Dz) == (3, 2):
        # theta_13 = 1 alone, or theta_12 + theta_23 <= 2
        assert len(got) == 7


def test_mu_of():
    assert bs.mu_of(UT(3)) == (0, 0)
    assert bs.mu_of(UT(3, (0, 1, 0))) == (1, 1)
    assert bs.mu_of(UT(3, (2, 0, 1))) == (2, 1)


def test_upper_tri_indexing():
    th = UT(4, (1, 2, 3, 4, 5, 6))
    assert [th[p] for p in UT.pairs(4)] == [1, 2, 3, 4, 5, 6]
    assert th[2, 1] == 0
    assert UT.from_dict(4, th.as_dict()) == th
    with pytest.raises(ValueError):
        UT(3, (1, 2))


def test_c_at_examples(P, P13):
    assert bs.c_at(UT(3), [1, Fraction(1, 5), Fraction(1, 55)], P) == 1
    assert bs.c_at(UT(1), [Fraction(3)], P) == 1
    q, t, r = Fraction(1, 3), Fraction(1, 2), Fraction(1, 5)
    direct = (1 - t * r) / (1 - q * r) * (1 - t) / (1 - q) * (q / t)
    assert bs.c_at(UT(2, (1,)), [1, r], P13) == direct == Fraction(27, 56)


def test_c_at_frozen(P):
    s = bs.ratios_to_point([Fraction(1, 5), Fraction(1, 11)], Fraction(1))
    assert bs.c_at(UT(3, (1, 0, 1)), s, P) == Fraction(21112, 421875)


def test_c_at_pole(P):
    with pytest.raises(bs.PoleError):
        bs.c_at(UT(2, (1,)), [1, 1 / P.q], P)


def test_c_series_examples(P):
    caps = (0, 5)
    assert bs.c_series(UT(2), P, caps) == TruncSeries.one(2, caps)
    q, t = P.q, P.t
    oracle = TruncSeries.const(2, caps, (q / t) * (1 - t) / (1 - q))
    oracle = oracle.mul_linear(t, (0, 1)) * TruncSeries(2, caps, {(0, 0): 1, (0, 1): -q}).inverse()
    assert bs.c_series(UT(2, (1,)), P, caps) == oracle


@pytest.mark.parametrize("entries", [(1, 0, 0), (0, 1, 0), (2, 1, 1), (1, 1, 2), (0, 2, 3)])
def test_c_series_constant_term_is_limit(P, entries):
    # s_j/s_i -> 0 along s = (1, eps, eps^2)
    th = UT(3, entries)
    e = EpsLaurent.eps((-2, 2))
    v = bs.c_at(th, [EpsLaurent.const(1, (-2, 2)), e, e * e], P)
    assert v.valuation() is None or v.valuation() >= 0
    assert bs.c_series(th, P, (0, 4)).constant_term() == v.coeff(0)


def test_c_recurrence_examples(P):
    caps = (0, 4)
    th = UT(2, (2,))
    lifted = UT(3, (2, 0, 0))
    assert bs.c_recurrence_rhs(lifted, P, caps) == bs.c_series(th, P, caps).embed(3, caps)
    assert bs.c_recurrence_rhs(UT(2, (1,)), P, caps) == bs.c_series(UT(2, (1,)), P, caps)


def test_c_recurrence_full_n3(P):
    caps = (0, 4)
    for th in bs.enumerate_Mn(3, 3):
        assert bs.c_recurrence_rhs(th, P, caps) == bs.c_series(th, P, caps), th


def test_p_series_basics(P):
    for n in (1, 2, 3):
        assert bs.p_series(n, P, (3, 3)).constant_term() == 1
    assert bs.p2_hypergeometric(P, (6, 6)) == bs.p_series(2, P, (6, 6))


@pytest.mark.parametrize("n", [2, 3, 4])
def test_p_collapses_at_t_delta(P, n):
    t = P.t
    s = [t ** (n - i) for i in range(1, n + 1)]
    coeffs = bs.p_coeffs_at(n, s, P, 4)
    assert coeffs[(0,) * (n - 1)] == 1
    assert all(v == 0 for mu, v in coeffs.items() if any(mu))


def test_p_at_examples(P):
    with working_precision(256):
        t = P.t
        val, _ = bs.p_at(3, [Fraction(1, 9), Fraction(1, 7)], [t * t, t, 1], P, 8)
        assert val == 1
        val, _ = bs.p_at(3, [0, 0], [1, Fraction(1, 5), Fraction(1, 55)], P, 8)
        assert val == 1


def test_p_at_matches_2phi1_partial_sum(P):
    x, w, N = Fraction(1, 10), Fraction(1, 5), 25
    with working_precision(256):
        val, shells = bs.p_at(2, [x], [1, w], P, N)
        q, t = mpmath.mpf(2) / 7, mpmath.mpf(3) / 5
        ref = mpmath.mpf(0)
        for k in range(N + 1):
            ref += (qpoch(t, q, k) * qpoch(t * w, q, k) / (qpoch(q, q, k) * qpoch(q * w, q, k))
                    * (q * x / t) ** k)
        assert abs(val - ref) < mpmath.mpf(10) ** -70
        assert len(shells) == N + 1


def test_gauged_series(P):
    caps = (4, 4)
    for n in (2, 3):
        assert bs.psi_series(n, P, caps).constant_term() == 1
        phi = bs.phi_series(n, P, caps)
        assert phi.restrict_leading("z", n) == bs.phi_leading(n, P, caps)
    assert bs.psi_series(2, P, (1, 1)).coeff_at((1, 1)) == Fraction(-44, 525)


def test_psi2_coefficient_from_closed_form(P):
    caps = (1, 1)
    with working_precision(256):
        F, _ = bs.closed_n2(P, caps)
        q = mpmath.mpf(2) / 7
        psi = apply_poch(apply_poch(F, q, (1, 0), q, None, True), q, (0, 1), q, None, True)
        assert abs(psi.coeff_at((1, 1)) - mpmath.mpf(-44) / 525) < mpmath.mpf(10) ** -60


def test_closed_n2_forms():
    P = Params(Fraction(3, 10), Fraction(1, 2))
    with working_precision(256):
        a = bs.closed_n2_at(Fraction(1, 10), Fraction(1, 10), P, "t")
        b = bs.closed_n2_at(Fraction(1, 10), Fraction(1, 10), P, "q/t")
        assert abs(a - b) < 1e-30
        c = bs.F2_at_from_series(Fraction(1, 10), Fraction(1, 10), P, 60)
        assert abs(a - c) < 1e-30
        assert abs(bs.closed_n2_at(0, 0, P) - 1) < 1e-60


def test_closed_n2_series_matches_F(P):
    caps = (3, 3)
    exact = bs.F_series(2, P, caps)
    with working_precision(256):
        for variant in ("t", "q/t"):
            num, _ = bs.closed_n2(P, caps, variant)
            for k, c in exact.items():
                assert abs(num.coeff_at(k) - mpmath.mpf(c.numerator) / c.denominator) < 1e-40


def test_closed_n3_p(P):
    caps = (3, 3)
    f = bs.closed_n3_p(P, caps)
    assert f.constant_term() == 1
    assert f == bs.p_series(3, P.dual(), caps)


@pytest.mark.parametrize("theta,rho", [(a, b) for a in range(3) for b in range(3)])
def test_n3_coefficient_double_sum(P, theta, rho):
    s = [1, Fraction(1, 5), Fraction(1, 55)]
    assert bs.n3_coefficient_lhs(theta, rho, s, P) == bs.n3_coefficient_rhs(theta, rho, s, P)


def test_closed_n3_phi_point():
    P = Params(Fraction(3, 10), Fraction(2, 5))
    x = [Fraction(1, 20), Fraction(1, 10)]
    s = [Fraction(3, 40), Fraction(1, 16)]
    with working_precision(256):
        a, last = bs.closed_n3_phi_at(x, s, P, 40)
        b, _ = bs.closed_n3_phi_at(s, x, P, 40)
        assert a == b or abs(a - b) < mpmath.mpf(10) ** -70
        ser, shells = bs.phi_at(3, x, s, P, 40)
        assert abs(a - ser) < 1e-20
        zero, _ = bs.closed_n3_phi_at([0, 0], [0, 0], P, 5)
        # at the origin every 2phi1 has argument-free terms and phi_3 = 1
        assert abs(zero - 1) < 1e-60
        lead = bs.phi_leading(3, P, (0, 0)).constant_term()
        assert lead == 1


def test_principal_small_n():
    P = Params(Fraction(3, 10), Fraction(5))
    with working_precision(256):
        lhs, _ = bs.principal_lhs(1, [1], P, 5)
        assert lhs == 1 == bs.principal_rhs(1, [1], P)
        lhs, shells = bs.principal_lhs(2, [1, Fraction(7, 100)], P, 40)
        rhs = bs.principal_rhs(2, [1, Fraction(7, 100)], P)
        assert abs(lhs / rhs - 1) < 1e-8
        assert shells[-1] < shells[-5]


def test_principal_n3():
    P = Params(Fraction(3, 10), Fraction(5))
    s = [1, Fraction(7, 100), Fraction(7, 2000)]
    with working_precision(256):
        lhs, shells = bs.principal_lhs(3, s, P, 30)
        rhs = bs.principal_rhs(3, s, P)
        assert abs(lhs / rhs - 1) < 1e-6
        assert all(shells[i + 1] < shells[i] for i in range(len(shells) - 6, len(shells) - 1))


def test_pole_probe_examples(P):
    assert bs.pole_probe(2, (0,), (1, 2), 0, "negative", P) == (0, False)
    assert bs.pole_probe(2, (1,), (1, 2), 0, "negative", P) == (-1, False)
    order, sat = bs.pole_probe(3, (1, 1), (1, 2), 0, "nonnegative", P)
    assert not sat and (order == ZERO or order >= 0)
    s = bs.probe_point(3, (1, 2), Fraction(1))
    terms = [bs.c_at(th, s, P) for th in bs.enumerate_Mn(3, 2) if bs.mu_of(th) == (1, 1)]
    assert sorted(t.valuation() for t in terms) == [-1, -1]


@settings(max_examples=25, deadline=None)
@given(st.integers(0, 2), st.integers(0, 2), st.integers(0, 2),
       st.sampled_from([Fraction(1, 5), Fraction(-3, 13), Fraction(2, 17)]),
       st.sampled_from([Fraction(1, 11), Fraction(5, 19)]))
def test_c_at_matches_factor_list(a, b, c, r1, r2):
    P = Params(Fraction(2, 7), Fraction(3, 5))
    th = UT(3, (a, b, c))
    s = bs.ratios_to_point([r1, r2], Fraction(1))
    direct = bs.c_at(th, s, P)
    manual = Fraction(1)
    q, t = P.q, P.t
    for f in bs.c_factors(th):
        r = s[f.j - 1] / s[f.i - 1]
        tag = {"t": t, "q": q, "q/t": q / t, "1": 1}
        manual *= (qpoch(q ** f.l * tag[f.num] * r, q, f.count)
                   / qpoch(q ** f.l * tag[f.den] * r, q, f.count))
    assert direct == manual

"""The coefficients c_n(theta; s | q, t) and the series p_n, phi_n, psi_n, F_n."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

import mpmath

from .mps import (Key, TruncSeries, apply_poch, key_add, key_scale, poch_ratio, series_sum,
                  wratio, zkey, zratio)
from .qseries import (HypergeometricSpec, Params, bhs_phi, qpoch, qpoch_inf)
from .ring import DEFAULT_WINDOW, EpsLaurent, ZERO, approx, pole_order


class PoleError(ZeroDivisionError):
    """A denominator factor of c_n vanished at the evaluation point."""

    def __init__(self, msg: str, where: Tuple[int, int, int, int]):
        super().__init__(msg)
        self.where = where


@dataclass(frozen=True)
class UpperTri:
    """Strictly upper triangular matrix with entries theta_{ij}, i < j.

    ``entries`` lists theta_{12}, theta_{13}, ..., theta_{1n}, theta_{23}, ...
    """

    n: int
    entries: Tuple[int, ...] = ()

    def __post_init__(self):
        need = self.n * (self.n - 1) // 2
        ent = tuple(self.entries) if self.entries else (0,) * need
        if len(ent) != need:
            raise ValueError(f"expected {need} entries for n={self.n}")
        if any(e < 0 for e in ent):
            raise ValueError("entries must be nonnegative")
        object.__setattr__(self, "entries", ent)

    @staticmethod
    def pairs(n: int) -> List[Tuple[int, int]]:
        return [(i, j) for i in range(1, n + 1) for j in range(i + 1, n + 1)]

    @classmethod
    def from_dict(cls, n: int, d: Dict[Tuple[int, int], int]) -> "UpperTri":
        return cls(n, tuple(d.get(p, 0) for p in cls.pairs(n)))

    def as_dict(self) -> Dict[Tuple[int, int], int]:
        return dict(zip(self.pairs(self.n), self.entries))

    def __getitem__(self, ij: Tuple[int, int]) -> int:
        i, j = ij
        if not (1 <= i < j <= self.n):
            return 0
        # row-major offset of (i, j)
        off = (i - 1) * self.n - (i - 1) * i // 2 + (j - i - 1)
        return self.entries[off]

    @property
    def zdeg(self) -> int:
        return sum(v * (j - i) for (i, j), v in zip(self.pairs(self.n), self.entries))

    @property
    def size(self) -> int:
        return sum(self.entries)

    def mu(self) -> Tuple[int, ...]:
        return mu_of(self)


def mu_of(theta: UpperTri) -> Tuple[int, ...]:
    """Root coordinates k_1..k_{n-1} of prod (x_j/x_i)^{theta_ij}."""
    n = theta.n
    out = [0] * (n - 1)
    for (i, j), v in zip(UpperTri.pairs(n), theta.entries):
        if v:
            for m in range(i - 1, j - 1):
                out[m] += v
    return tuple(out)


def enumerate_Mn(n: int, Dz: int) -> List[UpperTri]:
    """All theta in M_n with zdeg(theta) <= Dz, ordered by (zdeg, entries)."""
    pairs = UpperTri.pairs(n)
    weights = [j - i for i, j in pairs]
    out = []

    def rec(idx: int, budget: int, acc: List[int]):
        if idx == len(pairs):
            out.append(UpperTri(n, tuple(acc)))
            return
        w = weights[idx]
        for v in range(budget // w + 1):
            acc.append(v)
            rec(idx + 1, budget - v * w, acc)
            acc.pop()

    rec(0, Dz, [])
    out.sort(key=lambda th: (th.zdeg, th.entries))
    return out


def enumerate_by_size(n: int, N: int) -> List[UpperTri]:
    """All theta with |theta| = sum of entries <= N, ordered by (size, entries)."""
    m = n * (n - 1) // 2
    out = []
    for total in range(N + 1):
        for comp in _compositions(total, m):
            out.append(UpperTri(n, comp))
    return out


def _compositions(total: int, parts: int) -> Iterator[Tuple[int, ...]]:
    if parts == 0:
        if total == 0:
            yield ()
        return
    for first in range(total, -1, -1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# c_n


@dataclass(frozen=True)
class CFactor:
    """(q^l a s_j/s_i; q)_count / (q^l b s_j/s_i; q)_count, with a, b tags."""

    i: int
    j: int
    k: int
    l: int
    count: int
    num: str
    den: str


def c_factors(theta: UpperTri) -> List[CFactor]:
    n = theta.n
    out = []
    for k in range(2, n + 1):
        for i in range(1, k + 1):
            cnt = theta[i, k]
            if not cnt:
                continue
            for j in range(i + 1, k + 1):
                l = sum(theta[i, a] - theta[j, a] for a in range(k + 1, n + 1))
                out.append(CFactor(i, j, k, l, cnt, "t", "q"))
            for j in range(i, k):
                l = -theta[j, k] + sum(theta[i, a] - theta[j, a] for a in range(k + 1, n + 1))
                out.append(CFactor(i, j, k, l, cnt, "q/t", "1"))
    return out


def _tag(tag: str, q, t):
    return {"t": t, "q": q, "q/t": q / t, "1": q ** 0}[tag]


def _point(s: Sequence) -> List:
    # plain ints would divide to floats
    return [Fraction(v) if isinstance(v, int) else v for v in s]


def c_at(theta: UpperTri, s: Sequence, params: Params, q=None, t=None):
    """Exact (or numeric) value of c_n(theta; s | q, t) at the point s."""
    if len(s) != theta.n:
        raise ValueError("s must have n entries")
    s = _point(s)
    q = params.sq() if q is None else q
    t = params.st() if t is None else t
    out = 1
    for f in c_factors(theta):
        r = s[f.j - 1] / s[f.i - 1]
        ql = q ** f.l
        num = qpoch(ql * _tag(f.num, q, t) * r, q, f.count)
        den = qpoch(ql * _tag(f.den, q, t) * r, q, f.count)
        if den == 0:
            raise PoleError(f"denominator vanishes at (i,j,k,l)={(f.i, f.j, f.k, f.l)}",
                            (f.i, f.j, f.k, f.l))
        out = out * num / den
    return out


def _mono_for(n: int, i: int, j: int) -> Optional[Key]:
    return None if i == j else wratio(n, i, j)


def c_series(theta: UpperTri, params: Params, caps) -> TruncSeries:
    """w-expansion of c_n(theta; s) (w_i = s_{i+1}/s_i) to the caps."""
    return _c_series(theta, params, tuple(caps))


@lru_cache(maxsize=4096)
def _c_series(theta: UpperTri, params: Params, caps) -> TruncSeries:
    n = theta.n
    q, t = params.sq(), params.st()
    f = TruncSeries.one(n, caps)
    for fac in c_factors(theta):
        ql = q ** fac.l
        a = ql * _tag(fac.num, q, t)
        b = ql * _tag(fac.den, q, t)
        if fac.i == fac.j:
            den = qpoch(b, q, fac.count)
            if den == 0:
                raise PoleError(f"scalar denominator vanishes at {(fac.i, fac.k, fac.l)}",
                                (fac.i, fac.j, fac.k, fac.l))
            f = f.scale(qpoch(a, q, fac.count) / den)
        else:
            f = poch_ratio(f, a, b, wratio(n, fac.i, fac.j), q, fac.count)
    return f


def split_last_column(theta_t: UpperTri) -> Tuple[UpperTri, Tuple[int, ...]]:
    """theta~ in M_{n+1} -> (theta in M_n, nu in N^n)."""
    m = theta_t.n
    n = m - 1
    th = UpperTri.from_dict(n, {(i, j): theta_t[i, j] for i, j in UpperTri.pairs(n)})
    nu = tuple(theta_t[i, m] for i in range(1, m))
    return th, nu


def c_recurrence_rhs(theta_t: UpperTri, params: Params, caps) -> TruncSeries:
    """Right side of the column recursion for c_{n+1}, as a w-series."""
    caps = tuple(caps)
    m = theta_t.n
    n = m - 1
    th, nu = split_last_column(theta_t)
    q, t = params.sq(), params.st()
    inner = c_series(th, params, caps).embed(m, caps) if n >= 1 else TruncSeries.one(m, caps)
    f = inner.qshift("w", [-v for v in nu] + [0], q)
    for i in range(1, m + 1):
        for j in range(i + 1, m + 1):
            if i <= n and nu[i - 1]:
                f = poch_ratio(f, t, q, wratio(m, i, j), q, nu[i - 1])
    for i in range(1, n + 1):
        if not nu[i - 1]:
            continue
        for j in range(i, n + 1):
            shift = q ** (-nu[j - 1])
            if i == j:
                f = f.scale(qpoch(shift * q / t, q, nu[i - 1]) / qpoch(shift, q, nu[i - 1]))
            else:
                f = poch_ratio(f, shift * q / t, shift, wratio(m, i, j), q, nu[i - 1])
    return f


# ---------------------------------------------------------------------------
# series


def p_series(n: int, params: Params, caps) -> TruncSeries:
    """p_n = sum_theta c_n(theta; s) prod (x_j/x_i)^theta_ij, truncated."""
    return _p_series(n, params, tuple(caps))


@lru_cache(maxsize=64)
def _p_series(n: int, params: Params, caps) -> TruncSeries:
    parts = []
    for th in enumerate_Mn(n, caps[0]):
        parts.append(c_series(th, params, caps).mul_monomial(zkey(n, mu_of(th))))
    return series_sum(parts, n, caps)


def pair_product(f: TruncSeries, block: str, num, den, q) -> TruncSeries:
    """Multiply f by prod_{i<j} (num m_ij;q)_oo / (den m_ij;q)_oo.

    ``num`` or ``den`` may be None to omit that half; m_ij is x_j/x_i
    (block "z") or s_j/s_i (block "w").
    """
    n = f.n
    mk = zratio if block == "z" else wratio
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            key = mk(n, i, j)
            if num is not None:
                f = apply_poch(f, num, key, q, None, False)
            if den is not None:
                f = apply_poch(f, den, key, q, None, True)
    return f


def phi_series(n: int, params: Params, caps) -> TruncSeries:
    q, t = params.sq(), params.st()
    return pair_product(p_series(n, params, caps), "w", q, q / t, q)


def psi_series(n: int, params: Params, caps) -> TruncSeries:
    return _psi_series(n, params, tuple(caps))


@lru_cache(maxsize=64)
def _psi_series(n: int, params: Params, caps) -> TruncSeries:
    q, t = params.sq(), params.st()
    return pair_product(p_series(n, params, caps), "z", q / t, q, q)


def F_series(n: int, params: Params, caps) -> TruncSeries:
    q = params.sq()
    f = pair_product(psi_series(n, params, caps), "z", q, None, q)
    return pair_product(f, "w", q, None, q)


def phi_leading(n: int, params: Params, caps) -> TruncSeries:
    """prod_{i<j} (q s_j/s_i;q)_oo / (q s_j/t s_i;q)_oo as a w-series."""
    q, t = params.sq(), params.st()
    return pair_product(TruncSeries.one(n, caps), "w", q, q / t, q)


@dataclass(frozen=True)
class SeriesBundle:
    n: int
    params: Params
    p: TruncSeries
    phi: TruncSeries
    psi: TruncSeries
    F: TruncSeries


def series_bundle(n: int, params: Params, caps) -> SeriesBundle:
    return SeriesBundle(n, params, p_series(n, params, caps), phi_series(n, params, caps),
                        psi_series(n, params, caps), F_series(n, params, caps))


# ---------------------------------------------------------------------------
# pointwise evaluation


def ratios_to_point(ratios: Sequence, one=1) -> List:
    """(r_1..r_{n-1}) with r_i = v_{i+1}/v_i -> (v_1..v_n) with v_1 = 1."""
    out = [one]
    for r in ratios:
        out.append(out[-1] * r)
    return out


def p_coeffs_at(n: int, s: Sequence, params: Params, Dz: int) -> Dict[Tuple[int, ...], object]:
    """p_mu(s) = sum over M_n(mu) of c_n(theta; s), for all mu with zdeg <= Dz."""
    out: Dict[Tuple[int, ...], object] = {}
    for th in enumerate_Mn(n, Dz):
        v = c_at(th, s, params)
        mu = mu_of(th)
        out[mu] = out.get(mu, 0) + v
    return out


def p_at(n: int, x_ratios: Sequence, s: Sequence, params: Params, N: int):
    """Partial sum of p_n over |theta| <= N at a numeric point.

    Returns (value, shells) where shells[m] is the summed magnitude of the
    terms with |theta| = m.
    """
    fp = params.as_float()
    with mpmath.workprec(fp.precision):
        xs = [approx(r) for r in x_ratios]
        sv = [approx(v) for v in s]
        total = mpmath.mpf(0)
        shells = [mpmath.mpf(0)] * (N + 1)
        for th in enumerate_by_size(n, N):
            mono = mpmath.mpf(1)
            for a, e in enumerate(mu_of(th)):
                if e:
                    mono *= xs[a] ** e
            if mono == 0:
                continue
            term = c_at(th, sv, fp) * mono
            total += term
            shells[th.size] += abs(term)
        return total, shells


def phi_at(n: int, x_ratios: Sequence, s_ratios: Sequence, params: Params, N: int):
    """phi_n = prod (q s_j/s_i)_oo/(q s_j/t s_i)_oo * p_n at a numeric point."""
    fp = params.as_float()
    with mpmath.workprec(fp.precision):
        s = ratios_to_point([approx(r) for r in s_ratios], mpmath.mpf(1))
        q, t = fp.sq(), fp.st()
        pref = mpmath.mpf(1)
        for i in range(n):
            for j in range(i + 1, n):
                r = s[j] / s[i]
                pref *= qpoch_inf(q * r, q) / qpoch_inf(q * r / t, q)
        val, shells = p_at(n, x_ratios, s, fp, N)
        return pref * val, shells


# ---------------------------------------------------------------------------
# closed forms


def closed_n2(params: Params, caps, variant: str = "t", k_max: Optional[int] = None):
    """F_2 from its closed form, as a numeric (z_1, w_1) series.

    variant "t":   (t;q)_oo (q z w;q)_oo 2phi1(q z/t, q w/t; q z w; q, t)
    variant "q/t": the same with t replaced by q/t.
    The k-sum of the 2phi1 is not graded, so it is cut at ``k_max``; by
    default where |t|^k drops below the working precision.
    Returns (series, k_max).
    """
    fp = params.as_float()
    caps = tuple(caps)
    with mpmath.workprec(fp.precision):
        q = fp.sq()
        t = fp.st() if variant == "t" else fp.sq() / fp.st()
        if variant not in ("t", "q/t"):
            raise ValueError("variant must be 't' or 'q/t'")
        if not abs(t) < 1:
            raise ValueError("the closed form needs |t| < 1 for this variant")
        if k_max is None:
            k_max = int(fp.precision * mpmath.log(2) / -mpmath.log(abs(t))) + 8
        zk, wk, zw = (1, 0), (0, 1), (1, 1)
        term = TruncSeries.one(2, caps)
        total = term
        for k in range(k_max):
            # ratio of consecutive 2phi1 terms
            term = term.mul_linear(q ** (k + 1) / t, zk).mul_linear(q ** (k + 1) / t, wk)
            term = term.div_linear(q ** (k + 1), zw).scale(t / (1 - q ** (k + 1)))
            total = total + term
        total = apply_poch(total, q, zw, q, None, False)
        return total.scale(qpoch_inf(t, q)), k_max


def closed_n2_at(z, w, params: Params, variant: str = "t"):
    """Point value of the closed form of F_2 (numeric)."""
    fp = params.as_float()
    with mpmath.workprec(fp.precision):
        q = fp.sq()
        t = fp.st() if variant == "t" else fp.sq() / fp.st()
        z, w = approx(z), approx(w)
        spec = HypergeometricSpec((q * z / t, q * w / t), (q * z * w,), t, mode="adaptive")
        return qpoch_inf(t, q) * qpoch_inf(q * z * w, q) * bhs_phi(spec, q)


def F2_at_from_series(z, w, params: Params, N: int):
    """F_2 at a point from p_2 (the defining series), for cross-checks."""
    fp = params.as_float()
    with mpmath.workprec(fp.precision):
        q, t = fp.sq(), fp.st()
        z, w = approx(z), approx(w)
        p, _ = p_at(2, [z], [mpmath.mpf(1), w], fp, N)
        psi = qpoch_inf(q * z / t, q) / qpoch_inf(q * z, q) * p
        return qpoch_inf(q * z, q) * qpoch_inf(q * w, q) * psi


def p2_hypergeometric(params: Params, caps) -> TruncSeries:
    """p_2 from its 2phi1 form: sum_k (t)_k (t w)_k / ((q)_k (q w)_k) (q z/t)^k."""
    return _p2_sum(params.sq(), params.st(), tuple(caps))


def p2_euler_form(params: Params, caps) -> TruncSeries:
    """(t z)_oo / (q z/t)_oo times the same sum with t -> q/t (q-Euler transform)."""
    q, t = params.sq(), params.st()
    f = _p2_sum(q, q / t, tuple(caps))
    f = apply_poch(f, t, (1, 0), q, None, False)
    return apply_poch(f, q / t, (1, 0), q, None, True)


def _p2_sum(q, t, caps) -> TruncSeries:
    one = TruncSeries.one(2, caps)
    out = TruncSeries.zero(2, caps)
    for k in range(caps[0] + 1):
        sc = qpoch(t, q, k) / qpoch(q, q, k) * (q / t) ** k
        term = poch_ratio(one.scale(sc), t, q, (0, 1), q, k)
        out = out + term.mul_monomial((k, 0))
    return out


def closed_n3_p(params: Params, caps) -> TruncSeries:
    """Right side of the n=3 transformation; equals p_3(x; s | q, q/t)."""
    caps = tuple(caps)
    q, t = params.sq(), params.st()
    n = 3
    Dz, Dw = caps
    z = {(i, j): zratio(n, i, j) for i, j in UpperTri.pairs(n)}
    w = {(i, j): wratio(n, i, j) for i, j in UpperTri.pairs(n)}
    one = TruncSeries.one(n, caps)
    total = TruncSeries.zero(n, caps)
    for k in range(min(Dz, Dw) // 2 + 1):
        sc = (qpoch(q / t, q, k) ** 2 * qpoch(t, q, k) ** 2 / qpoch(q, q, k)) * (q / t) ** k * t ** k
        term = one.scale(sc)
        for p in UpperTri.pairs(n):
            term = apply_poch(term, q, w[p], q, k, True)
        term = term.mul_monomial(key_add(key_scale(w[1, 3], k), key_scale(z[1, 3], k)))
        if term.is_zero():
            continue
        for (i, j) in UpperTri.pairs(n):
            term = term * _phi21_z(n, caps, i, j, k, q, t)
        total = total + term
    return total


def _phi21_z(n, caps, i, j, k, q, t) -> TruncSeries:
    """2phi1(q^{k+1}/t, q s_j/t s_i; q^{k+1} s_j/s_i; q, t x_j/x_i) as a series."""
    zk, wk = zratio(n, i, j), wratio(n, i, j)
    one = TruncSeries.one(n, caps)
    out = TruncSeries.zero(n, caps)
    top = one.max_power(zk)
    a = q ** (k + 1) / t
    for m in range(top + 1):
        sc = qpoch(a, q, m) / qpoch(q, q, m) * t ** m
        term = poch_ratio(one.scale(sc), q / t, q ** (k + 1), wk, q, m)
        out = out + term.mul_monomial(key_scale(zk, m))
    return out


def n3_coefficient_lhs(theta: int, rho: int, s: Sequence, params: Params):
    """sum_k c_3(theta-k, k, rho-k; s | q, q/t): the z_1^theta z_2^rho coefficient."""
    dual = params.dual()
    out = 0
    for k in range(min(theta, rho) + 1):
        out = out + c_at(UpperTri(3, (theta - k, k, rho - k)), s, dual)
    return out


def n3_coefficient_rhs(theta: int, rho: int, s: Sequence, params: Params):
    """The terminating double sum for the same coefficient."""
    q, t = params.sq(), params.st()
    s1, s2, s3 = _point(s)
    r21, r32, r31 = s2 / s1, s3 / s2, s3 / s1
    pre = (t ** theta * qpoch(q / t, q, theta) * qpoch(q * r21 / t, q, theta)
           / (qpoch(q, q, theta) * qpoch(q * r21, q, theta)))
    pre = pre * (t ** rho * qpoch(q / t, q, rho) * qpoch(q * r32 / t, q, rho)
                 / (qpoch(q, q, rho) * qpoch(q * r32, q, rho)))
    total = 0
    for j in range(min(theta, rho) + 1):
        a = (qpoch(q ** -theta, q, j) * qpoch(q ** -theta / r21, q, j)
             / (qpoch(q ** -theta * t, q, j) * qpoch(q ** -theta * t / r21, q, j)))
        b = (qpoch(q ** -rho, q, j) * qpoch(q ** -rho / r32, q, j)
             / (qpoch(q ** -rho * t, q, j) * qpoch(q ** -rho * t / r32, q, j)))
        c = (qpoch(q / t, q, j) * qpoch(q * r31 / t, q, j)
             / (qpoch(q, q, j) * qpoch(q * r31, q, j)))
        spec = HypergeometricSpec(
            (t, t, q ** -j, q ** (theta - j + 1) / t, q ** (rho - j + 1) / t),
            (q / t, q ** -j * t / r31, q ** (theta - j + 1) * r21, q ** (rho - j + 1) * r32),
            q, mode="truncated", N=j)
        total = total + a * b * c * t ** (3 * j) * bhs_phi(spec, q)
    return pre * total


def closed_n3_phi_at(x_ratios: Sequence, s_ratios: Sequence, params: Params, N: int = 40):
    """phi_3 at a numeric point from the manifestly x<->s symmetric k-sum."""
    fp = params.as_float()
    with mpmath.workprec(fp.precision):
        q, t = fp.sq(), fp.st()
        if not abs(t) < 1:
            raise ValueError("this form needs |t| < 1")
        x = [approx(r) for r in x_ratios]
        s = [approx(r) for r in s_ratios]
        pairs = [(0, 1), (0, 2), (1, 2)]
        # pair ratios from consecutive ones, so zero ratios are allowed
        X = {(0, 1): x[0], (1, 2): x[1], (0, 2): x[0] * x[1]}
        S = {(0, 1): s[0], (1, 2): s[1], (0, 2): s[0] * s[1]}
        pref = mpmath.mpf(1)
        for p in pairs:
            pref *= (qpoch_inf(t, q) * qpoch_inf(q * X[p] * S[p], q)
                     / (qpoch_inf(q * X[p] / t, q) * qpoch_inf(q * S[p] / t, q)))
        total = mpmath.mpf(0)
        last = None
        for k in range(N + 1):
            sc = (qpoch(q / t, q, k) ** 2 / (qpoch(q, q, k) * qpoch(t, q, k))
                  * (q * X[0, 2] * S[0, 2]) ** k)
            prod = mpmath.mpf(1)
            for p in pairs:
                spec = HypergeometricSpec((q * X[p] / t, q * S[p] / t), (q * X[p] * S[p],),
                                          q ** k * t, mode="adaptive")
                prod *= bhs_phi(spec, q)
            last = sc * prod
            total += last
        return pref * total, abs(last)


# ---------------------------------------------------------------------------
# principal specialization


def principal_lhs(n: int, s: Sequence, params: Params, N: int):
    """sum_{|theta| <= N} c_n(theta; s) t^{sum (i-j) theta_ij}, with shell sums."""
    fp = params.as_float()
    with mpmath.workprec(fp.precision):
        sv = [approx(v) for v in s]
        t = fp.st()
        total = mpmath.mpf(0)
        shells = [mpmath.mpf(0)] * (N + 1)
        for th in enumerate_by_size(n, N):
            e = sum((i - j) * v for (i, j), v in th.as_dict().items())
            term = c_at(th, sv, fp) * t ** e
            total += term
            shells[th.size] += abs(term)
        return total, shells


def principal_rhs(n: int, s: Sequence, params: Params):
    fp = params.as_float()
    with mpmath.workprec(fp.precision):
        sv = [approx(v) for v in s]
        q, t = fp.sq(), fp.st()
        out = mpmath.mpf(1)
        for i in range(1, n + 1):
            out *= qpoch_inf(q / t, q) / qpoch_inf(q / t ** i, q)
        for i in range(n):
            for j in range(i + 1, n):
                r = sv[j] / sv[i]
                out *= qpoch_inf(q * r / t, q) / qpoch_inf(q * r, q)
        return out


# ---------------------------------------------------------------------------
# pole probes


DEFAULT_BASE_RATIOS = (Fraction(1, 5), Fraction(1, 11), Fraction(1, 13), Fraction(1, 17))


def probe_point(n: int, pair: Tuple[int, int], value: Fraction, window=DEFAULT_WINDOW,
                base_ratios: Sequence = DEFAULT_BASE_RATIOS) -> List[EpsLaurent]:
    """s_1..s_n with s_j/s_i = value (1 + eps) and the other ratios generic."""
    i, j = pair
    one = EpsLaurent.const(1, window)
    eps = EpsLaurent.eps(window)
    # consecutive ratios: generic except one slot inside [i, j) absorbs the pin
    ratios: List[object] = [EpsLaurent.const(base_ratios[a % len(base_ratios)], window)
                            for a in range(n - 1)]
    others = Fraction(1)
    for a in range(i - 1, j - 2):
        others *= base_ratios[a % len(base_ratios)]
    ratios[j - 2] = (one + eps) * (value / others)
    s = [one]
    for r in ratios:
        s.append(s[-1] * r)
    return s


def pole_probe(n: int, mu: Sequence[int], pair: Tuple[int, int], k: int, side: str,
               params: Params, window=DEFAULT_WINDOW,
               base_ratios: Sequence = DEFAULT_BASE_RATIOS):
    """Pole order of p_mu(s) along s_j/s_i = q^{-k-1} (side "negative") or q^k.

    Returns (order, saturated) where order is an int or ``ZERO``.
    """
    q = params.q
    value = q ** (-k - 1) if side == "negative" else q ** k
    if side not in ("negative", "nonnegative"):
        raise ValueError("side must be 'negative' or 'nonnegative'")
    s = probe_point(n, pair, value, window, base_ratios)
    zd = sum(mu)
    total = EpsLaurent({}, window)
    for th in enumerate_Mn(n, zd):
        if mu_of(th) != tuple(mu):
            continue
        total = total + c_at(th, s, params)
    order = pole_order(total)
    return order, total.floor_saturated


__all__ = [
    "PoleError", "UpperTri", "mu_of", "enumerate_Mn", "enumerate_by_size", "c_factors", "c_at",
    "c_series", "c_recurrence_rhs", "p_series", "phi_series", "psi_series", "F_series",
    "phi_leading", "series_bundle", "SeriesBundle", "p_coeffs_at", "p_at", "phi_at",
    "p2_hypergeometric", "p2_euler_form", "ratios_to_point", "closed_n2", "closed_n2_at", "F2_at_from_series", "closed_n3_p", "n3_coefficient_lhs", "n3_coefficient_rhs",
    "closed_n3_phi_at", "principal_lhs", "principal_rhs", "pole_probe", "probe_point",
    "pair_product", "ZERO",
]

"""Ruijsenaars-Macdonald operators: pointwise action, conjugated series action,
the K operator and the two recursion steps n -> n+1."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import comb
from typing import Callable, Dict, Iterator, List, Sequence, Tuple

from .mps import TruncSeries, apply_poch, key_add, key_scale, poch_ratio, wratio, zratio
from .qseries import Params, euler_expand, qpoch

Scalar = object
PolyEval = Callable[[Sequence], Scalar]


@dataclass(frozen=True)
class SubsetIndex:
    n: int
    members: frozenset

    def __post_init__(self):
        object.__setattr__(self, "members", frozenset(self.members))
        if any(not 1 <= i <= self.n for i in self.members):
            raise ValueError("subset members must lie in 1..n")

    def shift(self) -> List[int]:
        return [1 if i in self.members else 0 for i in range(1, self.n + 1)]

    def __len__(self):
        return len(self.members)


def subsets(n: int, r: int = None) -> Iterator[SubsetIndex]:
    sizes = range(n + 1) if r is None else [r]
    for k in sizes:
        for c in itertools.combinations(range(1, n + 1), k):
            yield SubsetIndex(n, frozenset(c))


def shift_vectors(n: int, weight: Sequence[int], budget: int) -> Iterator[Tuple[int, ...]]:
    """All nu in N^n with sum nu_i * weight[i] <= budget (weights positive)."""
    def rec(i, left):
        if i == n:
            yield ()
            return
        for v in range(left // weight[i] + 1):
            for rest in rec(i + 1, left - v * weight[i]):
                yield (v,) + rest
    yield from rec(0, budget)


def compositions_of(l: int, n: int) -> Iterator[Tuple[int, ...]]:
    """All nu in N^n with |nu| = l."""
    if n == 0:
        if l == 0:
            yield ()
        return
    for first in range(l, -1, -1):
        for rest in compositions_of(l - first, n - 1):
            yield (first,) + rest


# ---------------------------------------------------------------------------
# pointwise operators


def _qshifted(x: Sequence, nu: Sequence[int], q) -> List:
    return [xi * q ** k for xi, k in zip(x, nu)]


def D_apply_pointwise(r: int, f: PolyEval, x: Sequence, params: Params):
    """(D_r f)(x) with the t^{binom(r,2)} normalization."""
    n = len(x)
    if len(set(x)) != n:
        raise ZeroDivisionError("coordinates of x must be pairwise distinct")
    q, t = params.sq(), params.st()
    out = 0
    for I in subsets(n, r):
        coef = 1
        for i in I.members:
            for j in range(1, n + 1):
                if j not in I.members:
                    coef = coef * (t * x[i - 1] - x[j - 1]) / (x[i - 1] - x[j - 1])
        out = out + coef * f(_qshifted(x, I.shift(), q))
    return t ** comb(r, 2) * out


def H_apply_pointwise(l: int, f: PolyEval, x: Sequence, params: Params):
    """(H_l f)(x): the row-type operator, diagonal i = j factors included."""
    n = len(x)
    q, t = params.sq(), params.st()
    out = 0
    for nu in compositions_of(l, n):
        coef = 1
        for i in range(n):
            for j in range(i + 1, n):
                den = x[i] - x[j]
                if den == 0:
                    raise ZeroDivisionError("coordinates of x must be pairwise distinct")
                coef = coef * (q ** nu[i] * x[i] - q ** nu[j] * x[j]) / den
        for i in range(n):
            if not nu[i]:
                continue
            for j in range(n):
                r = x[i] / x[j]
                den = qpoch(q * r, q, nu[i])
                if den == 0:
                    raise ZeroDivisionError(f"(q x_{i + 1}/x_{j + 1};q)_{nu[i]} vanishes")
                coef = coef * qpoch(t * r, q, nu[i]) / den
        out = out + coef * f(_qshifted(x, nu, q))
    return out


def H_alt_apply_pointwise(l: int, f: PolyEval, x: Sequence, params: Params):
    """u^l coefficient of H(u) f in the conjugated form.

    The infinite-product gauge collapses to finite symbols:
    G(x)/G(q^nu x) = prod_{i<j} (q x_i/x_j;q)_{nu_i-nu_j} / (q x_i/t x_j;q)_{nu_i-nu_j}.
    """
    n = len(x)
    q, t = params.sq(), params.st()
    out = 0
    for nu in compositions_of(l, n):
        coef = t ** sum(i * nu[i] for i in range(n))
        for i in range(n):
            coef = coef * qpoch(t, q, nu[i]) / qpoch(q, q, nu[i])
        for i in range(n):
            for j in range(i + 1, n):
                r = x[i] / x[j]
                coef = coef * qpoch(t * r, q, nu[i]) / qpoch(q * r, q, nu[i])
                coef = coef * (qpoch(q ** (1 - nu[j]) * r / t, q, nu[i])
                               / qpoch(q ** (-nu[j]) * r, q, nu[i]))
                d = nu[i] - nu[j]
                coef = coef * qpoch(q * r, q, d) / qpoch(q * r / t, q, d)
        out = out + coef * f(_qshifted(x, nu, q))
    return out


def elementary(k: int, s: Sequence):
    out = 0
    for c in itertools.combinations(s, k):
        p = 1
        for v in c:
            p = p * v
        out = out + p
    return out


def h_from_spectrum(s: Sequence, params: Params, L: int) -> List:
    """u-coefficients h_0..h_L of prod_i (t u s_i;q)_oo / (u s_i;q)_oo."""
    q, t = params.sq(), params.st()
    out = [q ** 0] + [0] * L
    for si in s:
        # sum_k (t;q)_k/(q;q)_k (u s_i)^k
        fac = [qpoch(t, q, k) / qpoch(q, q, k) * si ** k for k in range(L + 1)]
        out = [sum(out[a] * fac[b - a] for a in range(b + 1)) for b in range(L + 1)]
    return out


def spectral_point(lam: Sequence[int], n: int, params: Params) -> List:
    """s = t^delta q^lambda, s_i = t^{n-i} q^{lambda_i}."""
    q, t = params.sq(), params.st()
    lam = list(lam) + [0] * (n - len(lam))
    return [t ** (n - i) * q ** lam[i - 1] for i in range(1, n + 1)]


def h_coeffs(lam: Sequence[int], n: int, params: Params, L: int) -> List:
    return h_from_spectrum(spectral_point(lam, n, params), params, L)


def wronski_residual(k: int, lam: Sequence[int], n: int, params: Params):
    """sum_{i+j=k} (-1)^i (1 - t^i q^j) e_i(s) h_j(s); zero by the Wronski relations."""
    if k < 1:
        raise ValueError("k must be at least 1")
    q, t = params.sq(), params.st()
    s = spectral_point(lam, n, params)
    h = h_from_spectrum(s, params, k)
    out = 0
    for i in range(0, min(k, n) + 1):
        j = k - i
        out = out + (-1) ** i * (1 - t ** i * q ** j) * elementary(i, s) * h[j]
    return out


def wronski_pointwise(f: PolyEval, x: Sequence, params: Params, U_max: int = 4) -> List:
    """u-coefficients of D(u)H(u)f - D(tu)H(qu)f at x, degrees 1..U_max."""
    n = len(x)
    q, t = params.sq(), params.st()
    out = []
    for k in range(1, U_max + 1):
        acc = 0
        for i in range(0, min(k, n) + 1):
            j = k - i
            g = (lambda jj: (lambda y: H_apply_pointwise(jj, f, y, params)))(j)
            acc = acc + (-1) ** i * (1 - t ** i * q ** j) * D_apply_pointwise(i, g, x, params)
        out.append(acc)
    return out


# ---------------------------------------------------------------------------
# conjugated operators on series


def _ratio_key(block: str, n: int, i: int, j: int):
    return zratio(n, i, j) if block == "z" else wratio(n, i, j)


def _other(block: str) -> str:
    return "w" if block == "z" else "z"


def conjugated_coeffs(kind: str, I: SubsetIndex, n: int, caps, params: Params,
                      block: str = "z") -> TruncSeries:
    """A_I (kind "A") or B_I (kind "B") as a series in the chosen block."""
    q, t = params.sq(), params.st()
    f = TruncSeries.one(n, caps)
    mem = I.members
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            key = _ratio_key(block, n, i, j)
            if kind == "A":
                if i in mem and j not in mem:
                    f = f.mul_linear(1 / t, key).div_linear(1, key)
                elif i not in mem and j in mem:
                    f = f.mul_linear(t, key).div_linear(1, key)
            elif kind == "B":
                if i not in mem and j in mem:
                    f = f.mul_linear(t, key).mul_linear(q / t, key)
                    f = f.div_linear(1, key).div_linear(q, key)
            else:
                raise ValueError("kind must be 'A' or 'B'")
    return f


def L_apply(kind: str, f: TruncSeries, params: Params, block: str = "z") -> List[TruncSeries]:
    """Apply the generating operator in the normalized spectral variable v.

    kind "E" acts on p (coefficients A_I), kind "L" on psi (coefficients B_I).
    Returns the coefficients of v^0..v^n.  With ``block="w"`` the roles of the
    two variable sets are exchanged.
    """
    n, caps = f.n, f.caps
    q = params.sq()
    ckind = {"E": "A", "L": "B"}.get(kind)
    if ckind is None:
        raise ValueError("kind must be 'E' or 'L'")
    other = _other(block)
    out = [TruncSeries.zero(n, caps) for _ in range(n + 1)]
    for I in subsets(n):
        term = conjugated_coeffs(ckind, I, n, caps, params, block) * f.qshift(block, I.shift(), q)
        mono = None
        for i in I.members:
            k = _ratio_key(other, n, 1, i) if i > 1 else None
            if k is not None:
                mono = k if mono is None else key_add(mono, k)
        if mono is not None:
            term = term.mul_monomial(mono)
        r = len(I)
        out[r] = out[r] + (term if r % 2 == 0 else -term)
    return out


def eigen_target(f: TruncSeries, block: str = "z") -> List[TruncSeries]:
    """v-coefficients of f * prod_i (1 - v s_i/s_1) (x_i/x_1 when block is "w")."""
    n = f.n
    other = _other(block)
    out = [f] + [TruncSeries.zero(n, f.caps) for _ in range(n)]
    for i in range(1, n + 1):
        new = list(out)
        for r in range(n, 0, -1):
            prev = out[r - 1]
            if i > 1:
                prev = prev.mul_monomial(_ratio_key(other, n, 1, i))
            new[r] = out[r] - prev
        out = new
    return out


def K_apply(f: TruncSeries, n_act: int, coef, params: Params, t=None,
            block: str = "z") -> TruncSeries:
    """K(u) on f, acting on the first n_act variables of the chosen block.

    u is coef * s_{n_act+1} (block "z") or coef * x_{n_act+1} (block "w"), so
    u/s_i = coef * s_{n_act+1}/s_i is a graded monomial.  ``t`` overrides the
    parameter t (e.g. q/t for the dual operator).
    """
    m = f.n
    if n_act + 1 > m:
        raise ValueError("K_apply needs an extra variable carrying u")
    q = params.sq()
    t = params.st() if t is None else t
    other = _other(block)
    caps = f.caps
    budget = caps[1] if block == "z" else caps[0]
    weight = [m - i for i in range(1, n_act + 1)]
    one = TruncSeries.one(m, caps)
    out = TruncSeries.zero(m, caps)
    for nu in shift_vectors(n_act, weight, budget):
        c = one
        sc = q ** 0
        mono = None
        for i in range(1, n_act + 1):
            v = nu[i - 1]
            if not v:
                continue
            sc = sc * qpoch(t, q, v) / qpoch(q, q, v) * coef ** v
            k = key_scale(_ratio_key(other, m, i, m), v)
            mono = k if mono is None else key_add(mono, k)
        if mono is not None:
            c = c.mul_monomial(mono, sc)
        else:
            c = c.scale(sc)
        if c.is_zero():
            continue
        for i in range(1, n_act + 1):
            v = nu[i - 1]
            if not v:
                continue
            for j in range(i + 1, n_act + 1):
                key = _ratio_key(block, m, i, j)
                c = poch_ratio(c, t, q, key, q, v)
                c = poch_ratio(c, q ** (1 - nu[j - 1]) / t, q ** (-nu[j - 1]), key, q, v)
        shift = [-v for v in nu] + [0] * (m - n_act)
        out = out + c * f.qshift(block, shift, q)
    return out


def K_eigenvalue(n_act: int, m: int, caps, coef, params: Params, t=None,
                 block: str = "z") -> TruncSeries:
    """prod_{i <= n_act} (t u/s_i;q)_oo / (u/s_i;q)_oo with u = coef * s_m."""
    q = params.sq()
    t = params.st() if t is None else t
    other = _other(block)
    f = TruncSeries.one(m, caps)
    for i in range(1, n_act + 1):
        key = _ratio_key(other, m, i, m)
        f = apply_poch(f, t * coef, key, q, None, False)
        f = apply_poch(f, coef, key, q, None, True)
    return f


# ---------------------------------------------------------------------------
# recursion steps


def _pairs_infinite(f: TruncSeries, block: str, n: int, num, den, q) -> TruncSeries:
    for i in range(1, n + 1):
        for j in range(i + 1, n + 1):
            key = _ratio_key(block, f.n, i, j)
            if num is not None:
                f = apply_poch(f, num, key, q, None, False)
            if den is not None:
                f = apply_poch(f, den, key, q, None, True)
    return f


def jackson_recur_step(phi_n: TruncSeries, params: Params) -> TruncSeries:
    """phi_{n+1}(x;s) from phi_n(x;s) by the explicit Jackson-sum recurrence.

    The sum is naturally written for phi_{n+1}(s;x); the input and output are
    swapped at the boundary.  Requires equal caps.
    """
    n = phi_n.n
    m = n + 1
    caps = phi_n.caps
    q, t = params.sq(), params.st()
    # phi_n(s;x) in the (z=x, w=s) convention, embedded into m variables
    base = phi_n.swap_blocks().embed(m, caps)
    one = TruncSeries.one(m, caps)
    out = TruncSeries.zero(m, caps)
    weight = [m - i for i in range(1, n + 1)]
    for nu in shift_vectors(n, weight, caps[1]):
        c = one
        sc = q ** 0
        mono = None
        for i in range(1, n + 1):
            v = nu[i - 1]
            if v:
                sc = sc * qpoch(q / t, q, v) / qpoch(q, q, v) * t ** v
                k = key_scale(wratio(m, i, m), v)
                mono = k if mono is None else key_add(mono, k)
        c = c.mul_monomial(mono, sc) if mono is not None else c.scale(sc)
        if c.is_zero():
            continue
        for i in range(1, n + 1):
            v = nu[i - 1]
            for j in range(i + 1, m + 1):
                key = zratio(m, i, j)
                if v:
                    c = poch_ratio(c, q / t, q, key, q, v)
                if j <= n:
                    vj = nu[j - 1]
                    if v:
                        c = poch_ratio(c, q ** (-vj) * t, q ** (-vj), key, q, v)
                    e = q ** (1 + v - vj)
                    c = apply_poch(c, e / t, key, q, None, False)
                    c = apply_poch(c, e, key, q, None, True)
        out = out + c * base.qshift("z", [-v for v in nu] + [0], q)
    # prefactors
    out = _pairs_infinite(out, "z", m, q, q / t, q)
    for i in range(1, n + 1):
        key = wratio(m, i, m)
        out = apply_poch(out, t, key, q, None, False)
        out = apply_poch(out, q / t, key, q, None, True)
    return out.swap_blocks()


def kop_recur_step(psi_n: TruncSeries, params: Params) -> TruncSeries:
    """psi_{n+1} from psi_n by the explicit double (mu, nu) sum."""
    n = psi_n.n
    m = n + 1
    caps = psi_n.caps
    q, t = params.sq(), params.st()
    base = psi_n.embed(m, caps)
    one = TruncSeries.one(m, caps)
    weight = [m - i for i in range(1, n + 1)]
    mus = list(shift_vectors(n, weight, caps[1]))
    nus = list(shift_vectors(n, weight, caps[0]))

    xpart = {}
    for mu in mus:
        c = one
        sc = q ** 0
        mono = None
        for i in range(1, n + 1):
            v = mu[i - 1]
            if v:
                sc = sc * qpoch(t, q, v) / qpoch(q, q, v) * (q / t) ** v
                k = key_scale(wratio(m, i, m), v)
                mono = k if mono is None else key_add(mono, k)
            for j in range(i + 1, n + 1):
                if v:
                    key = zratio(m, i, j)
                    c = poch_ratio(c, t, q, key, q, v)
                    c = poch_ratio(c, q ** (1 - mu[j - 1]) / t, q ** (-mu[j - 1]), key, q, v)
        xpart[mu] = c.mul_monomial(mono, sc) if mono is not None else c.scale(sc)
    spart = {}
    for nu in nus:
        c = one
        sc = q ** 0
        mono = None
        for i in range(1, n + 1):
            v = nu[i - 1]
            if v:
                sc = sc * qpoch(q / t, q, v) / qpoch(q, q, v) * t ** v
                k = key_scale(zratio(m, i, m), v)
                mono = k if mono is None else key_add(mono, k)
            for j in range(i + 1, n + 1):
                if v:
                    key = wratio(m, i, j)
                    c = poch_ratio(c, q / t, q, key, q, v)
                    c = poch_ratio(c, q ** (-nu[j - 1]) * t, q ** (-nu[j - 1]), key, q, v)
        spart[nu] = c.mul_monomial(mono, sc) if mono is not None else c.scale(sc)

    out = TruncSeries.zero(m, caps)
    for mu in mus:
        if xpart[mu].is_zero():
            continue
        shifted_x = base.qshift("z", [-v for v in mu] + [0], q)
        for nu in nus:
            if spart[nu].is_zero():
                continue
            coup = q ** sum(a * b for a, b in zip(mu, nu))
            term = (xpart[mu] * spart[nu]).scale(coup)
            if term.is_zero():
                continue
            out = out + term * shifted_x.qshift("w", [-v for v in nu] + [0], q)
    for i in range(1, n + 1):
        zk, wk = zratio(m, i, m), wratio(m, i, m)
        out = apply_poch(out, t, zk, q, None, False)
        out = apply_poch(out, q, zk, q, None, True)
        out = apply_poch(out, q / t, wk, q, None, False)
        out = apply_poch(out, q, wk, q, None, True)
    return out


def kop_recur_compose(psi_n: TruncSeries, params: Params) -> TruncSeries:
    """The same step written as K^{(x;s|q,t)}(q s_{n+1}/t) K^{(s;x|q,q/t)}(t x_{n+1})."""
    n = psi_n.n
    m = n + 1
    caps = psi_n.caps
    q, t = params.sq(), params.st()
    g = K_apply(psi_n.embed(m, caps), n, t, params, t=q / t, block="w")
    g = K_apply(g, n, q / t, params, t=t, block="z")
    for i in range(1, n + 1):
        zk, wk = zratio(m, i, m), wratio(m, i, m)
        g = apply_poch(g, t, zk, q, None, False)
        g = apply_poch(g, q, zk, q, None, True)
        g = apply_poch(g, q / t, wk, q, None, False)
        g = apply_poch(g, q, wk, q, None, True)
    return g


__all__ = [
    "SubsetIndex", "subsets", "shift_vectors", "compositions_of", "D_apply_pointwise",
    "H_apply_pointwise", "H_alt_apply_pointwise", "elementary", "h_from_spectrum",
    "spectral_point", "h_coeffs", "wronski_residual", "wronski_pointwise", "conjugated_coeffs",
    "L_apply", "eigen_target", "K_apply", "K_eigenvalue", "jackson_recur_step",
    "kop_recur_step", "kop_recur_compose",
]

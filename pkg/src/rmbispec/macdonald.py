"""Macdonald polynomials from the tableau sum, with evaluation, duality and the
specialization bridge to the coefficients c_n."""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterator, List, Optional, Sequence, Tuple

from .bispectral import UpperTri, c_at, enumerate_Mn, mu_of
from .mps import CapError
from .operators import spectral_point
from .qseries import Params, qpoch


@dataclass(frozen=True)
class Partition:
    parts: Tuple[int, ...]

    def __post_init__(self):
        p = tuple(int(v) for v in self.parts)
        if any(v < 0 for v in p) or any(p[i] < p[i + 1] for i in range(len(p) - 1)):
            raise ValueError(f"{p} is not a partition")
        object.__setattr__(self, "parts", p)

    @property
    def length(self) -> int:
        return sum(1 for v in self.parts if v)

    @property
    def size(self) -> int:
        return sum(self.parts)

    def padded(self, n: int) -> Tuple[int, ...]:
        if self.length > n:
            raise ValueError(f"partition {self.parts} has more than {n} parts")
        p = self.parts[:n]
        return p + (0,) * (n - len(p))


def _pad(lam, n: int) -> Tuple[int, ...]:
    if isinstance(lam, Partition):
        return lam.padded(n)
    return Partition(tuple(lam)).padded(n)


def partitions(size: int, max_len: int) -> Iterator[Tuple[int, ...]]:
    """Partitions of ``size`` with at most ``max_len`` parts, largest first."""
    def rec(left, cap, slots):
        if left == 0:
            yield ()
            return
        if slots == 0:
            return
        for first in range(min(left, cap), 0, -1):
            for rest in rec(left - first, first, slots - 1):
                yield (first,) + rest
    yield from rec(size, size, max_len)


def is_horizontal_strip(lam: Sequence[int], mu: Sequence[int]) -> bool:
    n = max(len(lam), len(mu))
    lam = tuple(lam) + (0,) * (n - len(lam))
    mu = tuple(mu) + (0,) * (n - len(mu))
    if any(m > l for l, m in zip(lam, mu)):
        return False
    return all(lam[i + 1] <= mu[i] for i in range(n - 1))


def psi_strip(lam: Sequence[int], mu: Sequence[int], params: Params):
    """The branching coefficient psi_{lam/mu}(q, t); zero off horizontal strips."""
    q, t = params.sq(), params.st()
    if not is_horizontal_strip(lam, mu):
        return q ** 0 - 1
    n = max(len(lam), len(mu)) + 1
    lam = tuple(lam) + (0,) * (n - len(lam))
    mu = tuple(mu) + (0,) * (n - len(mu))
    out = q ** 0
    for i in range(n):
        d = lam[i] - mu[i]
        if not d:
            continue
        for j in range(i + 1, n):
            out = out * qpoch(q ** (mu[i] - lam[j] + 1) * t ** (j - i - 1), q, d)
            out = out / qpoch(q ** (mu[i] - lam[j]) * t ** (j - i), q, d)
        for j in range(i, n - 1):
            out = out * qpoch(q ** (mu[i] - mu[j]) * t ** (j - i + 1), q, d)
            out = out / qpoch(q ** (mu[i] - mu[j] + 1) * t ** (j - i), q, d)
    return out


class SymmetricPoly:
    """Polynomial in x_1..x_n stored as {exponent tuple: coefficient}."""

    def __init__(self, n: int, terms: Dict[Tuple[int, ...], object]):
        self.n = n
        self.terms = {e: c for e, c in terms.items() if c != 0}

    def __call__(self, x: Sequence):
        out = 0
        for e, c in self.terms.items():
            m = c
            for xi, k in zip(x, e):
                if k:
                    m = m * xi ** k
            out = out + m
        return out

    def coeff(self, e: Sequence[int]):
        return self.terms.get(tuple(e), 0)

    def is_symmetric(self) -> bool:
        for e, c in self.terms.items():
            for perm in set(itertools.permutations(e)):
                if self.terms.get(perm, 0) != c:
                    return False
        return True

    def __sub__(self, other: "SymmetricPoly") -> "SymmetricPoly":
        out = dict(self.terms)
        for e, c in other.terms.items():
            out[e] = out.get(e, 0) - c
        return SymmetricPoly(self.n, out)

    def __eq__(self, other):
        return isinstance(other, SymmetricPoly) and self.n == other.n and self.terms == other.terms

    def items(self) -> List[Tuple[Tuple[int, ...], object]]:
        return sorted(self.terms.items(), key=lambda kv: tuple(-v for v in kv[0]))

    def to_json(self) -> dict:
        from .mps import scalar_str
        return {"n": self.n,
                "terms": [{"exponent": list(e), "coeff": scalar_str(c)} for e, c in self.items()]}


def _strips_below(lam: Tuple[int, ...], max_len: int) -> Iterator[Tuple[int, ...]]:
    """All mu with lam/mu a horizontal strip and at most max_len nonzero parts."""
    n = len(lam)
    ranges = []
    for i in range(n):
        lo = lam[i + 1] if i + 1 < n else 0
        ranges.append(range(lo, lam[i] + 1))
    for mu in itertools.product(*ranges):
        if sum(1 for v in mu if v) <= max_len:
            yield mu


def macdonald_poly(lam, n: int, params: Params) -> SymmetricPoly:
    """P_lambda(x|q,t) by the sum over chains of horizontal strips."""
    return _macdonald_poly(_pad(lam, n), n, params)


@lru_cache(maxsize=256)
def _macdonald_poly(lam: Tuple[int, ...], n: int, params: Params) -> SymmetricPoly:
    terms: Dict[Tuple[int, ...], object] = {}

    def rec(k: int, cur: Tuple[int, ...], coef, expo: List[int]):
        if k == 0:
            if any(cur):
                return
            e = tuple(expo)
            terms[e] = terms.get(e, 0) + coef
            return
        for mu in _strips_below(cur, k - 1):
            f = psi_strip(cur, mu, params)
            if f == 0:
                continue
            expo[k - 1] = sum(cur) - sum(mu)
            rec(k - 1, mu, coef * f, expo)
        expo[k - 1] = 0

    rec(n, lam, params.sq() ** 0, [0] * n)
    return SymmetricPoly(n, terms)


def delta_point(n: int, params: Params, lam=None) -> List:
    """t^delta q^lam as a point (t^{n-1} q^{lam_1}, ..., q^{lam_n})."""
    return spectral_point(_pad(lam or (), n), n, params)


def principal_eval(lam, n: int, params: Params):
    """P_lambda(t^delta) from the finite product formula."""
    q, t = params.sq(), params.st()
    lam = _pad(lam, n)
    out = t ** sum(i * lam[i] for i in range(n))
    for i in range(n):
        for j in range(i + 1, n):
            m = lam[i] - lam[j]
            out = out * qpoch(t ** (j - i + 1), q, m) / qpoch(t ** (j - i), q, m)
    return out


def principal_eval_alt(lam, n: int, params: Params):
    """The infinite-product display of P_lambda(t^delta), reduced exactly.

    With s = t^delta q^lam, (q s_j/t s_i)_oo / (q s_j/s_i)_oo over
    (q/t^{j-i+1})_oo / (q/t^{j-i})_oo collapses to finite symbols of
    length lam_i - lam_j, and the remaining ratio of (q/t^i)_oo telescopes.
    """
    q, t = params.sq(), params.st()
    lam = _pad(lam, n)
    out = t ** sum((n - 1 - i) * lam[i] for i in range(n))
    for i in range(n):
        for j in range(i + 1, n):
            m = lam[i] - lam[j]
            base = q ** (1 - m)
            out = out * qpoch(base * t ** (i - j - 1), q, m) / qpoch(base * t ** (i - j), q, m)
    return out


def normalized_at(lam, n: int, params: Params, point: Sequence):
    return macdonald_poly(lam, n, params)(point) / principal_eval(lam, n, params)


def duality_residual(lam, mu, n: int, params: Params):
    lam, mu = _pad(lam, n), _pad(mu, n)
    a = normalized_at(lam, n, params, delta_point(n, params, mu))
    b = normalized_at(mu, n, params, delta_point(n, params, lam))
    return a - b


def needed_zdeg(lam, n: int) -> int:
    """z-degree of x^lam / x^{reversed lam}, the lowest monomial of P_lam."""
    lam = _pad(lam, n)
    rev = lam[::-1]
    tot = 0
    run = 0
    for m in range(n - 1):
        run += lam[m] - rev[m]
        tot += run
    return tot


def specialized_p(lam, n: int, params: Params, Dz: Optional[int] = None
                  ) -> Dict[Tuple[int, ...], object]:
    """x^lam p_n(x; t^delta q^lam) as {x-exponent: coefficient}, over zdeg <= Dz."""
    lam = _pad(lam, n)
    need = needed_zdeg(lam, n)
    if Dz is None:
        Dz = need
    if Dz < need:
        raise CapError(f"Dz={Dz} cannot certify lambda={lam}; need at least {need}")
    s = delta_point(n, params, lam)
    out: Dict[Tuple[int, ...], object] = {}
    for th in enumerate_Mn(n, Dz):
        v = c_at(th, s, params)
        if v == 0:
            continue
        e = list(lam)
        for (i, j), k in th.as_dict().items():
            e[i - 1] -= k
            e[j - 1] += k
        out[tuple(e)] = out.get(tuple(e), 0) + v
    return out


def specialization_residual(lam, n: int, params: Params, Dz: Optional[int] = None
                            ) -> SymmetricPoly:
    """Difference between the specialized series and the tableau polynomial.

    Monomials with a negative exponent are kept, so a nonzero residual there
    is visible too.
    """
    spec = specialized_p(lam, n, params, Dz)
    P = macdonald_poly(lam, n, params)
    return SymmetricPoly(n, spec) - P


__all__ = [
    "Partition", "partitions", "is_horizontal_strip", "psi_strip", "SymmetricPoly",
    "macdonald_poly", "delta_point", "principal_eval", "principal_eval_alt", "normalized_at",
    "duality_residual", "needed_zdeg", "specialized_p", "specialization_residual",
]

"""q-shifted factorials, theta function and basic hypergeometric series."""

from __future__ import annotations

import functools
import math
from dataclasses import dataclass, field, replace
from fractions import Fraction
from typing import List, Optional, Sequence

import mpmath

from .ring import DEFAULT_PRECISION, approx, is_exact, q_power_of, rat

M_MAX = 512


def _min_precision(fn):
    """Run fn at the ambient mpmath precision, raised to DEFAULT_PRECISION if lower."""
    @functools.wraps(fn)
    def wrapper(*args, **kwargs):
        with mpmath.workprec(max(mpmath.mp.prec, DEFAULT_PRECISION)):
            return fn(*args, **kwargs)
    return wrapper


class NonGenericError(ValueError):
    """A denominator vanished because parameters are not generic."""


class NonTerminatingError(ValueError):
    """An exact evaluation was requested for a series that does not terminate."""


@dataclass(frozen=True)
class Params:
    """Base parameters (q, t) and the scalar backend.

    ``backend`` is ``"exact"`` (Fractions) or ``"float"`` (mpmath reals at
    ``precision`` bits).  With ``generic=True`` the numerators/denominators
    of q and t must be coprime, so that t^k lies in q^Z only for k = 0.
    """

    q: Fraction
    t: Fraction
    backend: str = "exact"
    precision: int = DEFAULT_PRECISION
    generic: bool = False

    def __post_init__(self):
        q, t = rat(self.q), rat(self.t)
        object.__setattr__(self, "q", q)
        object.__setattr__(self, "t", t)
        if q == 0 or t == 0:
            raise ValueError("q and t must be nonzero")
        if not abs(q) < 1:
            raise ValueError("|q| < 1 is required")
        if self.backend not in ("exact", "float"):
            raise ValueError(f"unknown backend {self.backend!r}")
        if self.precision < 64:
            raise ValueError("precision must be at least 64 bits")
        if self.generic and not prime_supports_disjoint(q, t):
            raise NonGenericError(f"q={q} and t={t} share a prime factor")

    @property
    def exact(self) -> bool:
        return self.backend == "exact"

    def dual(self) -> "Params":
        """The same parameters with t replaced by q/t.

        (q/t)^k lies in q^Z exactly when t^k does, so genericity carries over;
        the prime-support test itself cannot (q/t shares primes with q).
        """
        return replace(self, t=self.q / self.t, generic=False)

    def as_float(self, precision: Optional[int] = None) -> "Params":
        return replace(self, backend="float", precision=precision or self.precision,
                       generic=False)

    def sq(self):
        """q in the active scalar backend."""
        return self.q if self.exact else approx(self.q)

    def st(self):
        return self.t if self.exact else approx(self.t)

    def scalar(self, x):
        if self.exact:
            return rat(x)
        return approx(x)

    def to_json(self) -> dict:
        return {"q": f"{self.q.numerator}/{self.q.denominator}",
                "t": f"{self.t.numerator}/{self.t.denominator}",
                "backend": self.backend, "precision": self.precision}


def prime_supports_disjoint(a: Fraction, b: Fraction) -> bool:
    na = abs(a.numerator) * a.denominator
    nb = abs(b.numerator) * b.denominator
    return math.gcd(na, nb) == 1


# ---------------------------------------------------------------------------
# Pochhammer symbols


def qpoch(z, q, k: int):
    """(z;q)_k for any integer k, in the scalar ring of z and q."""
    one = z ** 0 if not isinstance(z, int) else 1
    if k >= 0:
        out = one
        for j in range(k):
            out = out * (1 - q ** j * z)
        return out
    den = one
    for j in range(1, -k + 1):
        f = 1 - z / q ** j
        if f == 0:
            raise ZeroDivisionError(f"(z;q)_{k}: factor 1 - q^-{j} z vanishes")
        den = den * f
    return 1 / den


def qpoch_many(params: Sequence, q, k: int):
    out = 1
    for a in params:
        out = out * qpoch(a, q, k)
    return out


def _check_tol(tol) -> None:
    floor = mpmath.mpf(2) ** (-(mpmath.mp.prec - 8))
    if tol < floor:
        raise ValueError(f"tolerance {tol} not achievable at {mpmath.mp.prec} bits")


@_min_precision
def qpoch_inf(z, q, tol=None):
    """(z;q)_oo as an mpmath real, truncated once the tail bound is below tol.

    The neglected factor prod_{k>=K}(1 - q^k z) differs from 1 by at most
    exp(S) - 1 with S = |z||q|^K / (1 - |q|).
    """
    z, q = approx(z), approx(q)
    if not abs(q) < 1:
        raise ValueError("|q| < 1 is required")
    if tol is None:
        tol = mpmath.mpf(2) ** (-(mpmath.mp.prec - 16))
    tol = approx(tol)
    _check_tol(tol)
    if z == 0:
        return mpmath.mpf(1)
    out = mpmath.mpf(1)
    qk = mpmath.mpf(1)
    aq = abs(q)
    while True:
        tail = abs(z) * abs(qk) / (1 - aq)
        if tail < 0.5 and mpmath.expm1(tail) < tol:
            return out
        out *= 1 - qk * z
        qk *= q


def qpoch_inf_ratio_exact(z, q, k: int):
    """(z;q)_oo / (q^k z;q)_oo as the finite symbol (z;q)_k, exactly."""
    return qpoch(z, q, k)


@_min_precision
def theta(z, q, tol=None):
    """theta(z;q) = (z;q)_oo (q/z;q)_oo (q;q)_oo."""
    z, q = approx(z), approx(q)
    if z == 0:
        raise ValueError("theta is undefined at z = 0")
    return qpoch_inf(z, q, tol) * qpoch_inf(q / z, q, tol) * qpoch_inf(q, q, tol)


# ---------------------------------------------------------------------------
# hypergeometric series


@dataclass(frozen=True)
class HypergeometricSpec:
    """_{r+1}phi_r data.  ``mode`` is "terminating", "truncated" (N terms
    beyond the constant) or "adaptive" (numeric, stop below ``tol``)."""

    upper: tuple
    lower: tuple
    argument: object
    mode: str = "terminating"
    N: Optional[int] = None
    tol: Optional[object] = None

    def __post_init__(self):
        object.__setattr__(self, "upper", tuple(self.upper))
        object.__setattr__(self, "lower", tuple(self.lower))
        if self.mode not in ("terminating", "truncated", "adaptive"):
            raise ValueError(f"unknown mode {self.mode!r}")
        if self.mode == "truncated" and (self.N is None or self.N < 0):
            raise ValueError("truncated mode needs N >= 0")


def termination_length(params: Sequence, q, m_max: int = M_MAX) -> Optional[int]:
    """Smallest m such that some parameter equals q^{-m} exactly."""
    best = None
    for a in params:
        if not is_exact(a):
            continue
        m = q_power_of(a, q, m_max)
        if m is not None and m <= 0:
            if best is None or -m < best:
                best = -m
    return best


def _length(upper, q, mode, N):
    if mode == "truncated":
        return N
    if not all(is_exact(a) for a in upper) or not is_exact(q):
        raise NonTerminatingError("terminating mode requires exact parameters")
    m = termination_length(upper, q)
    if m is None:
        raise NonTerminatingError("no upper parameter of the form q^-m")
    return m


def _hyper_sum(term_ratio, length, adaptive_tol=None, max_terms=100000):
    """Sum terms T_0 = 1, T_{k+1} = T_k * term_ratio(k)."""
    total = 1
    term = 1
    k = 0
    small = 0
    while True:
        if length is not None and k >= length:
            return total
        term = term * term_ratio(k)
        total = total + term
        k += 1
        if adaptive_tol is not None:
            small = small + 1 if abs(term) <= adaptive_tol * abs(total) else 0
            if small >= 3:
                return total
            if k > max_terms:
                raise ArithmeticError("adaptive series did not converge")


@_min_precision
def bhs_phi(spec: HypergeometricSpec, q):
    """The basic hypergeometric series _{r+1}phi_r with the given spec."""
    up, lo, z = spec.upper, spec.lower, spec.argument
    if len(up) != len(lo) + 1:
        raise ValueError("expected r+1 upper and r lower parameters")
    if spec.mode == "adaptive":
        length = None
        tol = approx(spec.tol) if spec.tol is not None else mpmath.mpf(2) ** (-(mpmath.mp.prec - 16))
    else:
        length = _length(up, q, spec.mode, spec.N)
        tol = None

    def ratio(k):
        num = z
        den = 1 - q ** (k + 1)
        for a in up:
            num = num * (1 - a * q ** k)
        for b in lo:
            f = 1 - b * q ** k
            if f == 0:
                raise NonGenericError(f"lower parameter {b} gives a zero denominator at n={k + 1}")
            den = den * f
        return num / den

    return _hyper_sum(ratio, length, tol)


@_min_precision
def bhs_vwp(a1, rest: Sequence, q, z, mode: str = "terminating", N: Optional[int] = None,
            square_pairs: Sequence = (), tol=None):
    """Very-well-poised series _{r+1}W_r(a1; rest; q, z).

    The paired entries q*sqrt(a1), -q*sqrt(a1) over sqrt(a1), -sqrt(a1) enter
    through the factor (1 - a1 q^{2k})/(1 - a1).  A pair of parameters
    +-sqrt(B) is passed as B in ``square_pairs`` and contributes
    (B;q^2)_k / (a1^2 q^2 / B;q^2)_k, so no square roots are taken.
    """
    rest = list(rest)
    if mode == "adaptive":
        length = None
        tol = approx(tol) if tol is not None else mpmath.mpf(2) ** (-(mpmath.mp.prec - 16))
    else:
        length = _length(rest, q, mode, N)
        tol = None
    q2 = q * q

    def ratio(k):
        num = z * (1 - a1 * q ** k) * (1 - a1 * q ** (2 * k + 2))
        den = (1 - q ** (k + 1)) * (1 - a1 * q ** (2 * k))
        for b in rest:
            num = num * (1 - b * q ** k)
            den = den * (1 - a1 * q ** (k + 1) / b)
        for B in square_pairs:
            num = num * (1 - B * q2 ** k)
            den = den * (1 - a1 * a1 * q2 / B * q2 ** k)
        if den == 0:
            raise NonGenericError(f"zero denominator at term {k + 1}")
        return num / den

    return _hyper_sum(ratio, length, tol)


def euler_expand(c, q, sign: str, D: int) -> List:
    """Coefficients g_0..g_D of (c m;q)_oo (sign "+") or 1/(c m;q)_oo (sign "-")."""
    if D < 0:
        raise ValueError("D must be nonnegative")
    if sign not in ("+", "-"):
        raise ValueError("sign must be '+' or '-'")
    out = [c ** 0 if not isinstance(c, int) else Fraction(1)]
    for k in range(1, D + 1):
        r = c / (1 - q ** k)
        if sign == "+":
            r = -r * q ** (k - 1)
        out.append(out[-1] * r)
    return out


def qbinomial_expand(a, c, q, D: int) -> List:
    """Coefficients of (a c m;q)_oo / (c m;q)_oo = sum (a;q)_k/(q;q)_k (c m)^k."""
    out = [Fraction(1) if is_exact(c) else c ** 0]
    for k in range(1, D + 1):
        out.append(out[-1] * (1 - a * q ** (k - 1)) / (1 - q ** k) * c)
    return out


def saalschutz_sides(n: int, a, b, c, q):
    """Both sides of the q-Saalschutz summation for a balanced 3phi2."""
    lhs = bhs_phi(HypergeometricSpec((q ** -n, a, b), (c, a * b * q ** (1 - n) / c), q), q)
    rhs = (qpoch(c / a, q, n) * qpoch(c / b, q, n)
           / (qpoch(c, q, n) * qpoch(c / (a * b), q, n)))
    return lhs, rhs

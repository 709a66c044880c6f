"""Scalar rings: exact rationals, epsilon-Laurent probes, and mpmath reals."""

from __future__ import annotations

from contextlib import contextmanager
from fractions import Fraction
from numbers import Rational
from typing import Dict, Iterator, Optional, Tuple, Union

import mpmath

ExactRational = Fraction

ZERO = "zero"
DEFAULT_WINDOW = (-4, 4)
DEFAULT_PRECISION = 256


def rat(x) -> Fraction:
    """Coerce ints, Fractions and decimal/"p/q" strings to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot convert {x!r} to an exact rational")


def rat_str(x: Fraction) -> str:
    x = Fraction(x)
    return f"{x.numerator}/{x.denominator}"


def parse_rat(text: str) -> Fraction:
    text = text.strip()
    if not text:
        raise ValueError("empty rational")
    return Fraction(text)


# ---------------------------------------------------------------------------
# approximate reals


@contextmanager
def working_precision(bits: int) -> Iterator[None]:
    """Run a block of mpmath arithmetic at ``bits`` of binary precision."""
    if bits < 64:
        raise ValueError("precision must be at least 64 bits")
    with mpmath.workprec(bits):
        yield


def approx(x, bits: Optional[int] = None):
    """Explicit conversion of an exact scalar into an mpmath real."""
    if isinstance(x, Fraction):
        return mpmath.mpf(x.numerator) / x.denominator
    return mpmath.mpf(x)


def is_exact(x) -> bool:
    return isinstance(x, (int, Fraction))


# ---------------------------------------------------------------------------
# epsilon-Laurent series


class EpsLaurent:
    """Truncated Laurent series in a perturbation variable eps.

    Coefficients are exact rationals kept for exponents in ``[lo, hi]``.
    ``prec`` is the first exponent whose coefficient is not known (``None``
    when the value is exact). ``saturated`` records that some intermediate
    result needed an exponent below ``lo``; such values are not trusted.
    """

    __slots__ = ("coeffs", "lo", "hi", "prec", "saturated")

    def __init__(
        self,
        coeffs: Optional[Dict[int, Fraction]] = None,
        window: Tuple[int, int] = DEFAULT_WINDOW,
        prec: Optional[int] = None,
        saturated: bool = False,
    ):
        lo, hi = window
        if not lo <= 0 <= hi:
            raise ValueError("window must satisfy lo <= 0 <= hi")
        self.lo = lo
        self.hi = hi
        cut = hi + 1 if prec is None else min(prec, hi + 1)
        if prec is not None and prec > hi + 1:
            prec = hi + 1
        clean: Dict[int, Fraction] = {}
        for e, c in (coeffs or {}).items():
            c = rat(c)
            if c == 0:
                continue
            if e >= cut:
                if prec is None:
                    prec = hi + 1
                continue
            if e < lo:
                saturated = True
                continue
            clean[e] = c
        self.coeffs = clean
        self.prec = prec
        self.saturated = saturated

    # construction -------------------------------------------------------
    @classmethod
    def const(cls, c, window=DEFAULT_WINDOW) -> "EpsLaurent":
        return cls({0: rat(c)}, window)

    @classmethod
    def eps(cls, window=DEFAULT_WINDOW) -> "EpsLaurent":
        return cls({1: Fraction(1)}, window)

    @property
    def window(self) -> Tuple[int, int]:
        return (self.lo, self.hi)

    def _coerce(self, other) -> "EpsLaurent":
        if isinstance(other, EpsLaurent):
            if other.window != self.window:
                raise ValueError("EpsLaurent window mismatch")
            return other
        return EpsLaurent({0: rat(other)}, self.window)

    def valuation(self) -> Optional[int]:
        """Smallest exponent with a nonzero known coefficient, or None."""
        return min(self.coeffs) if self.coeffs else None

    def coeff(self, e: int) -> Fraction:
        if self.prec is not None and e >= self.prec:
            raise ValueError(f"coefficient of eps^{e} is beyond known precision")
        return self.coeffs.get(e, Fraction(0))

    # ring operations ----------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return EpsLaurent(out, self.window, _pmin(self.prec, other.prec),
                          self.saturated or other.saturated)

    __radd__ = __add__

    def __neg__(self):
        return EpsLaurent({e: -c for e, c in self.coeffs.items()}, self.window,
                          self.prec, self.saturated)

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, EpsLaurent):
            c = rat(other)
            return EpsLaurent({e: v * c for e, v in self.coeffs.items()},
                              self.window, self.prec, self.saturated)
        other = self._coerce(other)
        va, vb = self.valuation(), other.valuation()
        if (va is None and self.prec is None) or (vb is None and other.prec is None):
            return EpsLaurent({}, self.window, None, self.saturated or other.saturated)
        prec = None
        if self.prec is not None:
            prec = self.prec + (vb if vb is not None else other.prec)
        if other.prec is not None:
            p2 = other.prec + (va if va is not None else self.prec)
            prec = p2 if prec is None else min(prec, p2)
        out: Dict[int, Fraction] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                out[e1 + e2] = out.get(e1 + e2, 0) + c1 * c2
        return EpsLaurent(out, self.window, prec,
                          self.saturated or other.saturated)

    __rmul__ = __mul__

    def inverse(self) -> "EpsLaurent":
        v = self.valuation()
        if v is None:
            raise ZeroDivisionError("EpsLaurent value has no nonzero coefficient in window")
        unit = {e - v: c for e, c in self.coeffs.items()}
        uprec = None if self.prec is None else self.prec - v
        c0 = unit[0]
        top = self.hi if uprec is None else min(uprec - 1, self.hi)
        if len(unit) == 1 and uprec is None:
            inv = {0: 1 / c0}
            iprec = None
        else:
            inv = {}
            for e in range(0, top + 1):
                acc = Fraction(1) if e == 0 else Fraction(0)
                for j in range(1, e + 1):
                    uj = unit.get(j)
                    if uj:
                        acc -= uj * inv.get(e - j, 0)
                inv[e] = acc / c0
            iprec = top + 1
        shifted = {e - v: c for e, c in inv.items()}
        return EpsLaurent(shifted, self.window,
                          None if iprec is None else iprec - v, self.saturated)

    def __truediv__(self, other):
        if not isinstance(other, EpsLaurent):
            c = rat(other)
            if c == 0:
                raise ZeroDivisionError("division by zero")
            return self * (1 / c)
        return self * self._coerce(other).inverse()

    def __rtruediv__(self, other):
        return self._coerce(other) * self.inverse()

    def __pow__(self, k: int):
        if not isinstance(k, int):
            raise TypeError("integer powers only")
        base = self if k >= 0 else self.inverse()
        out = EpsLaurent.const(1, self.window)
        for _ in range(abs(k)):
            out = out * base
        return out

    def __eq__(self, other):
        if isinstance(other, EpsLaurent):
            return (self.coeffs == other.coeffs and self.window == other.window
                    and self.prec == other.prec)
        try:
            return self == self._coerce(other)
        except TypeError:
            return NotImplemented

    def __hash__(self):
        return hash((tuple(sorted(self.coeffs.items())), self.window, self.prec))

    def __repr__(self):
        body = " + ".join(f"({c})e^{e}" for e, c in sorted(self.coeffs.items())) or "0"
        tail = "" if self.prec is None else f" + O(e^{self.prec})"
        return f"EpsLaurent({body}{tail})"

    def to_json(self):
        return [[e, rat_str(c)] for e, c in sorted(self.coeffs.items())]

    @property
    def floor_saturated(self) -> bool:
        v = self.valuation()
        return self.saturated or (v is not None and v <= self.lo)


def _pmin(a: Optional[int], b: Optional[int]) -> Optional[int]:
    if a is None:
        return b
    if b is None:
        return a
    return min(a, b)


def pole_order(v: EpsLaurent) -> Union[int, str]:
    """Order of the lowest nonzero eps-power, or ``ZERO`` for the zero value.

    Check ``v.floor_saturated`` before trusting a result equal to the floor.
    """
    val = v.valuation()
    return ZERO if val is None else val


def q_power_of(x: Fraction, q: Fraction, m_max: int = 512) -> Optional[int]:
    """Return m with x == q**m (|m| <= m_max) or None, by repeated division."""
    x, q = rat(x), rat(q)
    if x == 1:
        return 0
    if x == 0 or q in (0, 1, -1):
        return None
    # |q| < 1, so |q^m| < 1 exactly for m > 0
    direction = 1 if abs(x) < 1 else -1
    step = q if direction == 1 else 1 / q
    cur = Fraction(1)
    for m in range(1, m_max + 1):
        cur *= step
        if cur == x:
            return direction * m
        if abs(cur) < abs(x) if direction == 1 else abs(cur) > abs(x):
            return None
    return None

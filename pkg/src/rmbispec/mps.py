"""Truncated power series in z_i = x_{i+1}/x_i and w_i = s_{i+1}/s_i.

A monomial is stored as one flat tuple: the n-1 z-exponents followed by
the n-1 w-exponents.  Truncation is per block: zdeg <= Dz and wdeg <= Dw.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Callable, Dict, Iterable, List, NamedTuple, Optional, Sequence, Tuple

import mpmath

from .qseries import euler_expand, qpoch
from .ring import rat_str

Key = Tuple[int, ...]


class CapError(ValueError):
    """Series with different signatures or caps were combined."""


class UnknownCoefficient(KeyError):
    """A coefficient beyond the truncation caps was requested."""


class Monomial(NamedTuple):
    ze: Tuple[int, ...]
    we: Tuple[int, ...]

    @property
    def zdeg(self) -> int:
        return sum(self.ze)

    @property
    def wdeg(self) -> int:
        return sum(self.we)


class VarSignature(NamedTuple):
    n: int

    @property
    def slots(self) -> int:
        return self.n - 1


def ratio_exponents(n: int, i: int, j: int) -> Tuple[int, ...]:
    """Block exponents of x_j/x_i (1-based, i < j): slots i..j-1 are 1."""
    if not 1 <= i < j <= n:
        raise ValueError(f"need 1 <= i < j <= n, got {(i, j, n)}")
    return tuple(1 if i - 1 <= a < j - 1 else 0 for a in range(n - 1))


def zkey(n: int, ze: Sequence[int]) -> Key:
    return tuple(ze) + (0,) * (n - 1)


def wkey(n: int, we: Sequence[int]) -> Key:
    return (0,) * (n - 1) + tuple(we)


def zratio(n: int, i: int, j: int) -> Key:
    """Key of the monomial x_j/x_i."""
    return zkey(n, ratio_exponents(n, i, j))


def wratio(n: int, i: int, j: int) -> Key:
    """Key of the monomial s_j/s_i."""
    return wkey(n, ratio_exponents(n, i, j))


def key_add(a: Key, b: Key) -> Key:
    return tuple(x + y for x, y in zip(a, b))


def key_scale(a: Key, k: int) -> Key:
    return tuple(k * x for x in a)


def _is_zero(c) -> bool:
    return c == 0


class TruncSeries:
    """Immutable truncated series with a sparse coefficient map."""

    __slots__ = ("n", "caps", "terms")

    def __init__(self, n: int, caps: Tuple[int, int], terms: Optional[Dict[Key, object]] = None,
                 _trusted: bool = False):
        if n < 1:
            raise ValueError("n must be at least 1")
        self.n = n
        self.caps = (int(caps[0]), int(caps[1]))
        if _trusted:
            self.terms = terms
            return
        m = n - 1
        Dz, Dw = self.caps
        clean = {}
        for k, c in (terms or {}).items():
            k = tuple(k)
            if len(k) != 2 * m:
                raise ValueError(f"monomial {k} does not match n={n}")
            if any(e < 0 for e in k):
                raise ValueError("negative exponents are not allowed")
            if sum(k[:m]) > Dz or sum(k[m:]) > Dw or _is_zero(c):
                continue
            clean[k] = Fraction(c) if isinstance(c, int) else c
        self.terms = clean

    # constructors -------------------------------------------------------
    @classmethod
    def zero(cls, n: int, caps) -> "TruncSeries":
        return cls(n, caps, {}, _trusted=True)

    @classmethod
    def const(cls, n: int, caps, c=1) -> "TruncSeries":
        if isinstance(c, int):
            c = Fraction(c)
        return cls(n, caps, {(0,) * (2 * (n - 1)): c})

    @classmethod
    def one(cls, n: int, caps) -> "TruncSeries":
        return cls.const(n, caps, Fraction(1))

    @classmethod
    def monomial(cls, n: int, caps, key: Key, c=Fraction(1)) -> "TruncSeries":
        return cls(n, caps, {tuple(key): c})

    @classmethod
    def univariate(cls, n: int, caps, key: Key, coeffs: Sequence) -> "TruncSeries":
        """sum_p coeffs[p] * m^p for the monomial m with the given key."""
        out = {}
        cur = (0,) * (2 * (n - 1))
        for c in coeffs:
            out[cur] = out.get(cur, 0) + c
            cur = key_add(cur, key)
        return cls(n, caps, out)

    # basic properties ---------------------------------------------------
    @property
    def sig(self) -> VarSignature:
        return VarSignature(self.n)

    def _degs(self, k: Key) -> Tuple[int, int]:
        m = self.n - 1
        return sum(k[:m]), sum(k[m:])

    def fits(self, k: Key) -> bool:
        zd, wd = self._degs(k)
        return zd <= self.caps[0] and wd <= self.caps[1]

    def sort_key(self, k: Key):
        m = self.n - 1
        return (sum(k[:m]), k[:m], sum(k[m:]), k[m:])

    def items(self) -> List[Tuple[Key, object]]:
        """Terms in the deterministic graded-lex order, z-block first."""
        return sorted(self.terms.items(), key=lambda kv: self.sort_key(kv[0]))

    def __len__(self) -> int:
        return len(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def coeff_at(self, m) -> object:
        if isinstance(m, Monomial):
            k = tuple(m.ze) + tuple(m.we)
        else:
            k = tuple(m)
        if len(k) != 2 * (self.n - 1):
            raise ValueError("monomial does not match the signature")
        if not self.fits(k):
            raise UnknownCoefficient(f"monomial {k} lies outside caps {self.caps}")
        return self.terms.get(k, 0)

    def constant_term(self):
        return self.terms.get((0,) * (2 * (self.n - 1)), 0)

    # arithmetic ---------------------------------------------------------
    def _check(self, other: "TruncSeries") -> None:
        if self.n != other.n or self.caps != other.caps:
            raise CapError(f"signature/caps mismatch: n={self.n},{other.n} caps={self.caps},{other.caps}")

    def __add__(self, other):
        if not isinstance(other, TruncSeries):
            return self + TruncSeries.const(self.n, self.caps, other)
        self._check(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            v = out.get(k, 0) + c
            if _is_zero(v):
                out.pop(k, None)
            else:
                out[k] = v
        return TruncSeries(self.n, self.caps, out, _trusted=True)

    __radd__ = __add__

    def __neg__(self):
        return TruncSeries(self.n, self.caps, {k: -c for k, c in self.terms.items()}, _trusted=True)

    def __sub__(self, other):
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def scale(self, c) -> "TruncSeries":
        if _is_zero(c):
            return TruncSeries.zero(self.n, self.caps)
        return TruncSeries(self.n, self.caps, {k: v * c for k, v in self.terms.items()}, _trusted=True)

    def __mul__(self, other):
        if not isinstance(other, TruncSeries):
            return self.scale(other)
        self._check(other)
        m = self.n - 1
        Dz, Dw = self.caps
        bl = sorted(((k, c, sum(k[:m]), sum(k[m:])) for k, c in other.terms.items()),
                    key=lambda r: r[2])
        out: Dict[Key, object] = {}
        for ka, ca in self.terms.items():
            za, wa = sum(ka[:m]), sum(ka[m:])
            zr, wr = Dz - za, Dw - wa
            for kb, cb, zb, wb in bl:
                if zb > zr:
                    break
                if wb > wr:
                    continue
                k = tuple(x + y for x, y in zip(ka, kb))
                out[k] = out.get(k, 0) + ca * cb
        return TruncSeries(self.n, self.caps, {k: v for k, v in out.items() if not _is_zero(v)},
                           _trusted=True)

    def __rmul__(self, other):
        return self.scale(other)

    def __eq__(self, other):
        if not isinstance(other, TruncSeries):
            return NotImplemented
        return self.n == other.n and self.caps == other.caps and self.terms == other.terms

    def __hash__(self):
        return hash((self.n, self.caps, tuple(self.items())))

    def __repr__(self):
        shown = ", ".join(f"{k}: {c}" for k, c in self.items()[:6])
        more = "" if len(self) <= 6 else f", ... ({len(self)} terms)"
        return f"TruncSeries(n={self.n}, caps={self.caps}, {{{shown}{more}}})"

    def map_coeffs(self, f: Callable) -> "TruncSeries":
        return TruncSeries(self.n, self.caps, {k: f(c) for k, c in self.terms.items()})

    # monomial-level operations -----------------------------------------
    def mul_monomial(self, key: Key, c=1) -> "TruncSeries":
        """Multiply by c * m where m is the monomial with the given key."""
        out = {}
        for k, v in self.terms.items():
            nk = key_add(k, key)
            if self.fits(nk):
                out[nk] = v * c if c != 1 else v
        return TruncSeries(self.n, self.caps, out, _trusted=True)

    def mul_linear(self, a, key: Key) -> "TruncSeries":
        """Multiply by (1 - a m)."""
        return self - self.mul_monomial(key, a)

    def div_linear(self, a, key: Key) -> "TruncSeries":
        """Divide by the unit (1 - a m); m must have positive degree."""
        if not any(key):
            raise ZeroDivisionError("div_linear needs a monomial of positive degree")
        out = self
        shifted = self
        j = 0
        while True:
            j += 1
            shifted = shifted.mul_monomial(key, a)
            if shifted.is_zero():
                return out
            out = out + shifted

    def mul_univariate(self, coeffs: Sequence, key: Key) -> "TruncSeries":
        """Multiply by sum_p coeffs[p] m^p."""
        out = self.scale(coeffs[0]) if coeffs else TruncSeries.zero(self.n, self.caps)
        shifted = self
        for c in coeffs[1:]:
            shifted = shifted.mul_monomial(key)
            if shifted.is_zero():
                break
            if not _is_zero(c):
                out = out + shifted.scale(c)
        return out

    def max_power(self, key: Key) -> int:
        """Largest p such that m^p fits in the caps (m of positive degree)."""
        zd, wd = self._degs(key)
        bounds = []
        if zd:
            bounds.append(self.caps[0] // zd)
        if wd:
            bounds.append(self.caps[1] // wd)
        if not bounds:
            raise ValueError("monomial of degree zero")
        return min(bounds)

    def inverse(self) -> "TruncSeries":
        """Multiplicative inverse of a unit, by fixed-point iteration on degree."""
        c0 = self.constant_term()
        if _is_zero(c0):
            raise ZeroDivisionError("series is not a unit (zero constant term)")
        inv0 = 1 / c0
        zero_key = (0,) * (2 * (self.n - 1))
        rest = TruncSeries(self.n, self.caps,
                           {k: -v * inv0 for k, v in self.terms.items() if k != zero_key},
                           _trusted=True)
        # 1/(c0 (1 - r)) = inv0 * sum r^j ; r has positive degree so the sum is finite
        out = TruncSeries.const(self.n, self.caps, inv0)
        power = TruncSeries.const(self.n, self.caps, inv0)
        while True:
            power = power * rest
            if power.is_zero():
                return out
            out = out + power

    # substitutions ------------------------------------------------------
    def qshift(self, block: str, shift: Sequence[int], q) -> "TruncSeries":
        """Substitute x_i -> q^{shift_i} x_i (block "z") or s_i -> q^{shift_i} s_i ("w")."""
        n = self.n
        if len(shift) != n:
            raise ValueError(f"shift must have length n={n}")
        if not any(shift):
            return self
        off = 0 if block == "z" else n - 1
        if block not in ("z", "w"):
            raise ValueError("block must be 'z' or 'w'")
        cache: Dict[int, object] = {}
        out = {}
        for k, c in self.terms.items():
            e = 0
            prev = 0
            for i in range(n):
                cur = k[off + i] if i < n - 1 else 0
                e -= shift[i] * (cur - prev)
                prev = cur
            if e:
                if e not in cache:
                    cache[e] = q ** e
                c = c * cache[e]
            out[k] = c
        return TruncSeries(self.n, self.caps, out, _trusted=True)

    def swap_blocks(self) -> "TruncSeries":
        if self.caps[0] != self.caps[1]:
            raise CapError("swap_blocks needs Dz == Dw")
        m = self.n - 1
        return TruncSeries(self.n, self.caps, {k[m:] + k[:m]: c for k, c in self.terms.items()},
                           _trusted=True)

    def restrict_leading(self, block: str, r: int) -> "TruncSeries":
        """Set the first r-1 slots of the block to zero."""
        if not 1 <= r <= self.n:
            raise ValueError("need 1 <= r <= n")
        off = 0 if block == "z" else self.n - 1
        idx = range(off, off + r - 1)
        return TruncSeries(self.n, self.caps,
                           {k: c for k, c in self.terms.items() if not any(k[i] for i in idx)},
                           _trusted=True)

    def truncate(self, caps) -> "TruncSeries":
        caps = (int(caps[0]), int(caps[1]))
        if caps[0] > self.caps[0] or caps[1] > self.caps[1]:
            raise CapError("cannot truncate to larger caps")
        return TruncSeries(self.n, caps, self.terms)

    def reindex(self, n_new: int, z_slots: Sequence[int], w_slots: Sequence[int],
                caps=None) -> "TruncSeries":
        """Move old slot a to new slot z_slots[a] (resp. w_slots[a]), 0-based."""
        m, mn = self.n - 1, n_new - 1
        out = {}
        for k, c in self.terms.items():
            nk = [0] * (2 * mn)
            for a in range(m):
                if k[a]:
                    nk[z_slots[a]] += k[a]
                if k[m + a]:
                    nk[mn + w_slots[a]] += k[m + a]
            out[tuple(nk)] = c
        return TruncSeries(n_new, caps or self.caps, out)

    def embed(self, n_new: int, caps=None) -> "TruncSeries":
        """View a series in x_1..x_n, s_1..s_n as one in n_new >= n variables."""
        idx = list(range(self.n - 1))
        return self.reindex(n_new, idx, idx, caps)

    # evaluation / serialization ----------------------------------------
    def evaluate(self, zvals: Sequence, wvals: Sequence):
        vals = list(zvals) + list(wvals)
        total = 0
        for k, c in self.items():
            term = c
            for v, e in zip(vals, k):
                if e:
                    term = term * v ** e
            total = total + term
        return total

    def to_json(self) -> dict:
        m = self.n - 1
        return {
            "n": self.n,
            "caps": list(self.caps),
            "terms": [{"ze": list(k[:m]), "we": list(k[m:]), "coeff": scalar_str(c)}
                      for k, c in self.items()],
        }

    @classmethod
    def from_json(cls, data: dict) -> "TruncSeries":
        n = data["n"]
        terms = {tuple(t["ze"]) + tuple(t["we"]): Fraction(t["coeff"]) for t in data["terms"]}
        return cls(n, tuple(data["caps"]), terms)


def scalar_str(c) -> str:
    if isinstance(c, (int, Fraction)):
        return rat_str(Fraction(c))
    return mpmath.nstr(c, max(15, mpmath.mp.dps), min_fixed=-5, max_fixed=5)


def poch_factor(c, key: Key, q, count, reciprocal: bool, n: int, caps) -> TruncSeries:
    """Expansion of (c m;q)_count or its reciprocal; count may be None for oo."""
    return apply_poch(TruncSeries.one(n, caps), c, key, q, count, reciprocal)


def apply_poch(f: TruncSeries, c, key: Key, q, count, reciprocal: bool) -> TruncSeries:
    """Multiply f by (c m;q)_count, or divide by it when ``reciprocal``.

    ``count`` None means the infinite product; m is the monomial ``key``.
    A monomial of degree zero is a scalar and is handled exactly.
    """
    if not any(key):
        if count is None:
            raise ValueError("infinite product of a scalar is not a series operation")
        v = qpoch(c, q, count)
        if reciprocal:
            if v == 0:
                raise ZeroDivisionError(f"(c;q)_{count} vanishes for c={c}")
            return f.scale(1 / v)
        return f.scale(v)
    if count is None:
        D = f.max_power(key)
        return f.mul_univariate(euler_expand(c, q, "-" if reciprocal else "+", D), key)
    if count >= 0:
        for j in range(count):
            a = c * q ** j
            f = f.div_linear(a, key) if reciprocal else f.mul_linear(a, key)
        return f
    # (cm;q)_k = 1 / prod_{j=1}^{-k} (1 - q^{-j} c m)
    for j in range(1, -count + 1):
        a = c / q ** j
        f = f.mul_linear(a, key) if reciprocal else f.div_linear(a, key)
    return f


def poch_ratio(f: TruncSeries, num_c, den_c, key: Key, q, count) -> TruncSeries:
    """Multiply f by (num_c m;q)_count / (den_c m;q)_count."""
    f = apply_poch(f, num_c, key, q, count, False)
    return apply_poch(f, den_c, key, q, count, True)


def series_sum(parts: Iterable[TruncSeries], n: int, caps) -> TruncSeries:
    acc: Dict[Key, object] = {}
    for p in parts:
        for k, c in p.terms.items():
            acc[k] = acc.get(k, 0) + c
    return TruncSeries(n, caps, {k: v for k, v in acc.items() if not _is_zero(v)})

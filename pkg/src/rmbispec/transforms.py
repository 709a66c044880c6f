"""Terminating basic hypergeometric transformations used for the n = 3 closed form.

Each ``*_sides`` function returns (lhs, rhs) evaluated exactly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Sequence, Tuple

from .bispectral import UpperTri, c_at, n3_coefficient_lhs
from .qseries import HypergeometricSpec, Params, bhs_phi, bhs_vwp, qpoch


def _pochs(params: Sequence, q, k: int):
    out = q ** 0
    for a in params:
        out = out * qpoch(a, q, k)
    return out


def vwp_root_reduction_sides(theta: int, a, f, extra: Sequence, z, q) -> Tuple[object, object]:
    """Very-well-poised reduction with the paired square-root parameters.

    LHS is W(a; q^-theta, q^theta a f, extra..., +-sqrt(aq/f), +-sqrt(aq^2/f); q, z);
    the root pairs are handled through ``square_pairs``.
    """
    lhs = bhs_vwp(a, [q ** -theta, q ** theta * a * f] + list(extra), q, z,
                  square_pairs=(a * q / f, a * q * q / f))
    pre = (qpoch(a * q, q, theta) * qpoch(f * f / q, q, theta)
           / (qpoch(a * f, q, theta) * qpoch(f, q, theta)))
    total = 0
    for m in range(theta + 1):
        w = (_pochs([q / f, q ** -theta, a * q / f], q, m)
             / _pochs([q, q ** -theta * q * q / (f * f), a * q], q, m) * q ** m)
        inner = bhs_vwp(a, [q ** -m, q ** m * a * q / f] + list(extra), q, z)
        total = total + w * inner
    return lhs, pre * total


def order_exchange_sides(theta: int, a, c, d, e, f, g, q) -> Tuple[object, object]:
    """Exchange of summation after expanding each 10W9 (with b = q^m aq/f)."""
    def weight(m):
        return (_pochs([q / f, q ** -theta, a * q / f], q, m)
                / _pochs([q, q ** -theta * q * q / (f * f), a * q], q, m) * q ** m)

    lhs = 0
    for m in range(theta + 1):
        b = q ** m * a * q / f
        arg = a ** 3 * q ** (m + 3) / (b * c * d * e * f * g)
        lhs = lhs + weight(m) * bhs_vwp(a, [b, c, d, e, f, g, q ** -m], q, arg)
    rhs = 0
    for j in range(theta + 1):
        for m in range(j, theta + 1):
            b = q ** m * a * q / f
            w = (_pochs([q / f, q ** -theta, a * q / (f * g)], q, m)
                 / _pochs([q, q ** -theta * q * q / (f * f), a * q / g], q, m) * q ** m)
            w = w * (_pochs([q ** -m, f, g, a * q / (d * e)], q, j)
                     / _pochs([q, a * q / d, a * q / e, q ** -m * f * g / a], q, j) * q ** j)
            spec = HypergeometricSpec((q ** -j, d, e, a * q / (b * c)),
                                      (a * q / b, a * q / c, q ** -j * d * e / a), q)
            rhs = rhs + w * bhs_phi(spec, q)
    return lhs, rhs


def w10_to_5phi4_sides(theta: int, a, c, d, e, f, q) -> Tuple[object, object]:
    lhs = 0
    for m in range(theta + 1):
        w = (_pochs([q / f, q ** -theta, a * q / f], q, m)
             / _pochs([q, q ** -theta * q * q / (f * f), a * q], q, m) * q ** m)
        inner = bhs_vwp(a, [q ** m * a * q / f, c, d, e, f, a * f / e, q ** -m], q,
                        a * q * q / (c * d * f))
        lhs = lhs + w * inner
    pre = (_pochs([e, f], q, theta) / _pochs([e * q / f, f * f / q], q, theta))
    total = 0
    for j in range(theta + 1):
        w = ((a * q ** 3 / (c * d * f * f)) ** j
             * _pochs([c, d, f, a * f / e, q ** -theta, q ** -theta * f / e], q, j)
             / _pochs([q, a * q / c, a * q / d, a * q / e, q ** (1 - theta) / e,
                       q ** (1 - theta) / f], q, j))
        spec = HypergeometricSpec(
            (q ** -j, a * q / (c * d), q / f, q ** (theta - j) * f, q ** -j * e / a),
            (f, q ** (1 - j) / d, q ** (1 - j) / c, q ** (theta - j) * e * q / f), q)
        total = total + w * bhs_phi(spec, q)
    return lhs, pre * total


def n3_w14_parameters(rho: int, s: Sequence, params: Params) -> dict:
    """The substitution linking the n = 3 coefficient sum to the W-series."""
    q, t = params.sq(), params.st()
    s1, s2, s3 = (Fraction(v) if isinstance(v, int) else v for v in s)
    return {
        "a": q ** -rho * s2 / s1,
        "c": q * s3 / (t * s1),
        "d": q ** -rho * s2 / s3,
        "e": q * s2 / (t * s1),
        "f": q / t,
        "g": q ** -rho,
    }


def n3_w14_sides(theta: int, rho: int, s: Sequence, params: Params) -> Tuple[object, object]:
    """sum_k c_3(theta-k, k, rho-k | q, q/t) against c_3(theta, 0, rho) times a 14W13."""
    q, t = params.sq(), params.st()
    lhs = n3_coefficient_lhs(theta, rho, s, params)
    v = n3_w14_parameters(rho, s, params)
    a, f = v["a"], v["f"]
    head = c_at(UpperTri(3, (theta, 0, rho)), s, params.dual())
    w = bhs_vwp(a, [q ** -theta, q ** theta * a * f, v["c"], v["d"], v["e"], f, v["g"]],
                q, t * t, square_pairs=(a * q / f, a * q * q / f))
    return lhs, head * w


__all__ = [
    "vwp_root_reduction_sides", "order_exchange_sides", "w10_to_5phi4_sides",
    "n3_w14_parameters", "n3_w14_sides",
]

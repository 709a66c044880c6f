"""Bispectral Macdonald-Ruijsenaars series, operators and identity checks."""

from .ring import EpsLaurent, ExactRational, pole_order, working_precision
from .qseries import HypergeometricSpec, NonGenericError, Params, bhs_phi, bhs_vwp, qpoch, qpoch_inf
from .mps import Monomial, TruncSeries, VarSignature

__version__ = "0.1.0"

__all__ = [
    "EpsLaurent", "ExactRational", "pole_order", "working_precision", "HypergeometricSpec",
    "NonGenericError", "Params", "bhs_phi", "bhs_vwp", "qpoch", "qpoch_inf", "Monomial",
    "TruncSeries", "VarSignature",
]

"""BDFk 卷积求积模块"""

from .generating import GeneratingPoly, bdf_generating_poly, MAX_ORDER
from .weights import WeightSet, fractional_weights, tempered_weights
from .corrections import CorrectionTable, correction_table

__all__ = [
    "GeneratingPoly",
    "bdf_generating_poly",
    "MAX_ORDER",
    "WeightSet",
    "fractional_weights",
    "tempered_weights",
    "CorrectionTable",
    "correction_table",
]

"""参考解模块"""

from .mittag_leffler import (
    mittag_leffler,
    mittag_leffler_array,
    ml_asymptotic,
    ml_integral,
    ml_series,
)
from .solutions import eigenmode_solution, fine_step_oracle, inhomogeneous_eigenmode_solution

__all__ = [
    "mittag_leffler",
    "mittag_leffler_array",
    "ml_asymptotic",
    "ml_integral",
    "ml_series",
    "eigenmode_solution",
    "fine_step_oracle",
    "inhomogeneous_eigenmode_solution",
]

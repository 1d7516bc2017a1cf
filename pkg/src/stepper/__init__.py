"""时间推进模块"""

from .problem import ProblemSpec, Trajectory
from .bdf_stepper import (
    history_convolution,
    run_corrected,
    run_scheme,
    run_standard,
    scheme_residual,
)

__all__ = [
    "ProblemSpec",
    "Trajectory",
    "history_convolution",
    "run_corrected",
    "run_scheme",
    "run_standard",
    "scheme_residual",
]

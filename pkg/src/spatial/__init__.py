"""空间离散模块"""

from .chebyshev import chebyshev_laplacian, chebyshev_points
from .operator import (
    BACKENDS,
    SpectralOperator,
    build_operator,
    fractional_power,
    sine_nodes,
    sine_operator,
)
from .solver import ShiftedSolver, solve_shifted

__all__ = [
    "chebyshev_laplacian",
    "chebyshev_points",
    "BACKENDS",
    "SpectralOperator",
    "build_operator",
    "fractional_power",
    "sine_nodes",
    "sine_operator",
    "ShiftedSolver",
    "solve_shifted",
]

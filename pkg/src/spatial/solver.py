"""平移线性系统 (μI + A)u = rhs 的求解

μ = τ^{-γ} q_0 在整个时间推进中不变，LU 分解只做一次。
"""

import numpy as np
import scipy.linalg

from .operator import SpectralOperator
from ..utils.exceptions import require
from ..utils.logger import get_logger

logger = get_logger("spatial")


class ShiftedSolver:
    """(μI + A) 的稠密 LU 分解，构造后只读"""

    def __init__(self, op: SpectralOperator, mu: float):
        """
        初始化求解器

        Args:
            op: 分数阶算子
            mu: 平移量，μ > 0
        """
        require(np.isfinite(mu) and mu > 0.0, "SHIFT_INVALID", mu=mu)
        self.op = op
        self.mu = float(mu)
        system = self.mu * np.eye(op.size) + op.matrix
        self._lu = scipy.linalg.lu_factor(system, check_finite=True)
        logger.debug("LU 分解完成: size=%d, μ=%.6g", op.size, self.mu)

    def solve(self, rhs: np.ndarray) -> np.ndarray:
        """
        求解 (μI + A)u = rhs

        Args:
            rhs: 右端向量（或按列排列的多个右端）

        Returns:
            np.ndarray: 解 u
        """
        rhs = np.asarray(rhs, dtype=float)
        require(rhs.ndim in (1, 2) and rhs.shape[0] == self.op.size, "DIMENSION_MISMATCH",
                expected=self.op.size, actual=rhs.shape)
        # 非有限值交给时间推进的爆破检查处理
        return scipy.linalg.lu_solve(self._lu, rhs, check_finite=False)


def solve_shifted(op: SpectralOperator, mu: float, rhs: np.ndarray) -> np.ndarray:
    """
    单次求解 (μI + A)u = rhs

    示例:
        >>> from src.spatial import fractional_power
        >>> solve_shifted(fractional_power(np.array([[1.0]]), 2.0), 1.0, np.array([2.0]))
        array([1.])
    """
    return ShiftedSolver(op, mu).solve(rhs)

"""离散分数阶 Laplace 算子

A = (-Δ)^{α/2} 通过 Dirichlet Laplace 矩阵的谱分解定义：
A = V · diag(λ_j^{α/2}) · V⁻¹。

两种后端：
    - chebyshev: 对 Chebyshev 配置矩阵做矩阵分数幂
    - sine: 解析特征对 λ_j = (jπ/2)², φ_j(x) = sin(jπ(x+1)/2)，用作参考
"""

from dataclasses import dataclass
from typing import Optional

import numpy as np
import scipy.linalg

from .chebyshev import chebyshev_laplacian
from ..utils.error_messages import ErrorMessages
from ..utils.exceptions import SpectralDecompositionError, require
from ..utils.logger import get_logger

logger = get_logger("spatial")

BACKENDS = ("chebyshev", "sine")

# 特征值虚部相对容差、特征向量条件数上限、构造后残差告警阈值
IMAG_TOLERANCE = 1e-8
CONDITION_LIMIT = 1e12
RESIDUAL_TOLERANCE = 1e-8


def check_alpha(alpha: float) -> None:
    """空间阶数须位于 (1, 2]"""
    require(1.0 < alpha <= 2.0, "SPACE_ORDER_INVALID", alpha=alpha)


def _freeze(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True)
class SpectralOperator:
    """
    离散分数阶 Laplace 算子（构造后只读，可在线程间共享）

    Attributes:
        M: 网格区间数
        nodes: 内部节点
        matrix: 稠密矩阵 A
        eigenvalues: λ_j^{α/2}（升序）
        base_eigenvalues: Laplace 特征值 λ_j
        eigenvectors: V（列为特征向量）
        eigenvectors_inv: V⁻¹（sine 后端截断模态时为伪逆）
        alpha: 空间阶数
        backend: "chebyshev" 或 "sine"
    """

    M: int
    nodes: np.ndarray
    matrix: np.ndarray
    eigenvalues: np.ndarray
    base_eigenvalues: np.ndarray
    eigenvectors: np.ndarray
    eigenvectors_inv: np.ndarray
    alpha: float
    backend: str

    @property
    def size(self) -> int:
        """未知量个数（内部节点数）"""
        return self.matrix.shape[0]

    def apply(self, v: np.ndarray) -> np.ndarray:
        """
        通过特征分解计算 A·v

        Args:
            v: 节点上的向量

        Returns:
            np.ndarray: A·v
        """
        v = np.asarray(v, dtype=float)
        require(v.shape[0] == self.size, "DIMENSION_MISMATCH", expected=self.size, actual=v.shape[0])
        coeffs = self.eigenvectors_inv @ v
        if v.ndim == 1:
            scaled = self.eigenvalues * coeffs
        else:
            scaled = self.eigenvalues[:, None] * coeffs
        return np.real(self.eigenvectors @ scaled)

    def eigen_residual(self) -> float:
        """相对残差 ‖A·V - V·diag(λ^{α/2})‖_F / (‖A‖_F ‖V‖_F)"""
        V = self.eigenvectors
        lhs = self.matrix @ V
        rhs = V * self.eigenvalues[None, :]
        scale = np.linalg.norm(self.matrix) * np.linalg.norm(V)
        if scale == 0.0:
            return 0.0
        return float(np.linalg.norm(lhs - rhs) / scale)

    def mode(self, j: int) -> np.ndarray:
        """第 j 个特征向量（j 从 1 开始，按特征值升序）"""
        return np.real(self.eigenvectors[:, j - 1]).copy()


def fractional_power(
    L: np.ndarray,
    alpha: float,
    nodes: Optional[np.ndarray] = None,
    backend: str = "chebyshev",
) -> SpectralOperator:
    """
    计算矩阵分数幂 A = V · diag(λ^{α/2}) · V⁻¹

    特征值虚部满足 max|Im λ| <= 1e-8 · max|Re λ| 时丢弃虚部，否则报错。

    Args:
        L: 方阵（Dirichlet Laplace 的离散）
        alpha: 空间阶数，1 < α <= 2
        nodes: 内部节点（可选，缺省为下标）
        backend: 后端名称，仅作记录

    Returns:
        SpectralOperator: 分数阶算子

    Raises:
        SpectralDecompositionError: 特征值为复数、实部非正或特征向量奇异
    """
    check_alpha(alpha)
    L = np.atleast_2d(np.asarray(L, dtype=float))
    require(L.ndim == 2 and L.shape[0] == L.shape[1], "DIMENSION_MISMATCH",
            expected="square matrix", actual=L.shape)
    m = L.shape[0]

    w, V = scipy.linalg.eig(L)
    max_real = float(np.max(np.abs(w.real)))
    max_imag = float(np.max(np.abs(w.imag)))
    if max_imag > IMAG_TOLERANCE * max_real:
        raise SpectralDecompositionError(
            ErrorMessages.get("EIGENVALUE_COMPLEX", imag=max_imag, tol=IMAG_TOLERANCE * max_real))
    lam = w.real
    if np.min(lam) <= 0.0:
        raise SpectralDecompositionError(ErrorMessages.get("EIGENVALUE_NOT_POSITIVE", value=float(np.min(lam))))

    order = np.argsort(lam)
    lam = lam[order]
    V = V[:, order]
    if not np.any(V.imag):
        V = V.real

    cond = float(np.linalg.cond(V))
    if not np.isfinite(cond) or cond > CONDITION_LIMIT:
        raise SpectralDecompositionError(ErrorMessages.get("EIGENVECTORS_SINGULAR", cond=cond))

    V_inv = np.linalg.inv(V)
    powered = lam ** (alpha / 2.0)
    A = np.real((V * powered[None, :]) @ V_inv)

    op = SpectralOperator(
        M=m + 1,
        nodes=_freeze(np.arange(m, dtype=float) if nodes is None else np.asarray(nodes, dtype=float).copy()),
        matrix=_freeze(A),
        eigenvalues=_freeze(powered),
        base_eigenvalues=_freeze(lam),
        eigenvectors=_freeze(V),
        eigenvectors_inv=_freeze(V_inv),
        alpha=float(alpha),
        backend=backend,
    )
    residual = op.eigen_residual()
    if residual > RESIDUAL_TOLERANCE:
        logger.warning("特征分解残差偏大: %.3e (size=%d, cond=%.3e)", residual, m, cond)
    logger.debug("分数幂算子: backend=%s, size=%d, α=%.4g, cond(V)=%.3e", backend, m, alpha, cond)
    return op


def sine_nodes(M_grid: int) -> np.ndarray:
    """均匀内部网格 x_i = -1 + 2i/M_grid，i = 1..M_grid-1"""
    return -1.0 + 2.0 * np.arange(1, M_grid) / M_grid


def sine_operator(n_modes: int, M_grid: int, alpha: float) -> SpectralOperator:
    """
    解析正弦特征基构造的算子

    Args:
        n_modes: 保留的模态数，1 <= n_modes <= M_grid-1
        M_grid: 均匀网格区间数
        alpha: 空间阶数

    Returns:
        SpectralOperator: 特征对精确已知的算子

    示例:
        >>> op = sine_operator(3, 4, 2.0)
        >>> op.base_eigenvalues[2] == (3 * np.pi / 2) ** 2
        True
    """
    check_alpha(alpha)
    require(isinstance(M_grid, (int, np.integer)) and M_grid >= 2, "GRID_TOO_SMALL", M=M_grid, minimum=2)
    require(isinstance(n_modes, (int, np.integer)) and 1 <= n_modes <= M_grid - 1,
            "MODE_COUNT_INVALID", n_modes=n_modes, limit=M_grid - 1)

    i = np.arange(1, M_grid)
    j = np.arange(1, n_modes + 1)
    # φ_j(x_i) = sin(jπ(x_i+1)/2) = sin(jπi/M_grid)
    V = np.sin(np.pi * np.outer(i, j) / M_grid)
    # 离散正弦变换的正交关系：Σ_i sin(jπi/M) sin(lπi/M) = (M/2) δ_jl
    V_pinv = (2.0 / M_grid) * V.T
    lam = (j * np.pi / 2.0) ** 2
    powered = lam ** (alpha / 2.0)
    A = (V * powered[None, :]) @ V_pinv

    return SpectralOperator(
        M=int(M_grid),
        nodes=_freeze(sine_nodes(M_grid)),
        matrix=_freeze(A),
        eigenvalues=_freeze(powered),
        base_eigenvalues=_freeze(lam),
        eigenvectors=_freeze(V),
        eigenvectors_inv=_freeze(V_pinv),
        alpha=float(alpha),
        backend="sine",
    )


def build_operator(backend: str, M: int, alpha: float) -> SpectralOperator:
    """
    按后端名称构造算子

    Args:
        backend: "chebyshev" 或 "sine"
        M: 网格区间数（sine 后端保留全部 M-1 个模态）
        alpha: 空间阶数

    Returns:
        SpectralOperator: 分数阶算子
    """
    if backend == "chebyshev":
        nodes, L = chebyshev_laplacian(M)
        return fractional_power(L, alpha, nodes=nodes, backend="chebyshev")
    if backend == "sine":
        return sine_operator(M - 1, M, alpha)
    require(False, "CONFIG_INVALID_VALUE", name="backend", value=backend)

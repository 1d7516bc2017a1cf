"""Chebyshev-Gauss-Lobatto 谱配置

在 [-1, 1] 上构造一阶微分矩阵，平方得到二阶微分矩阵，删去边界行列后得到
齐次 Dirichlet 条件下 -d²/dx² 的配置矩阵。
"""

from typing import Tuple

import numpy as np

from ..utils.exceptions import require

MIN_INTERVALS = 4


def chebyshev_points(M: int) -> np.ndarray:
    """
    CGL 节点 x_i = cos(iπ/M)，i = 0..M（从 1 递减到 -1）

    Args:
        M: 网格区间数

    Returns:
        np.ndarray: 长度 M+1 的节点数组
    """
    return np.cos(np.pi * np.arange(M + 1) / M)


def chebyshev_differentiation(M: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    一阶 Chebyshev 微分矩阵

    对角元用负行和给出，使常数向量的导数精确为零并减小舍入误差。

    Args:
        M: 网格区间数

    Returns:
        Tuple[np.ndarray, np.ndarray]: (节点, (M+1)×(M+1) 微分矩阵)
    """
    x = chebyshev_points(M)
    c = np.ones(M + 1)
    c[0] = c[-1] = 2.0
    c *= (-1.0) ** np.arange(M + 1)

    dx = x[:, None] - x[None, :]
    D = np.outer(c, 1.0 / c) / (dx + np.eye(M + 1))
    D -= np.diag(D.sum(axis=1))
    return x, D


def chebyshev_laplacian(M: int) -> Tuple[np.ndarray, np.ndarray]:
    """
    构造 Dirichlet 条件下 -d²/dx² 的配置矩阵

    Args:
        M: 网格区间数，M >= 4

    Returns:
        Tuple[np.ndarray, np.ndarray]: (内部节点 x_1..x_{M-1}, (M-1)×(M-1) 矩阵 L)

    示例:
        >>> nodes, L = chebyshev_laplacian(4)
        >>> nodes.round(6)
        array([ 0.707107,  0.      , -0.707107])
    """
    require(isinstance(M, (int, np.integer)) and M >= MIN_INTERVALS,
            "GRID_TOO_SMALL", M=M, minimum=MIN_INTERVALS)
    x, D = chebyshev_differentiation(int(M))
    D2 = D @ D
    # 删除首末行列即施加 G(±1) = 0
    L = -D2[1:-1, 1:-1]
    nodes = x[1:-1].copy()
    # cos(π/2) 的浮点值约为 6e-17，示性函数在 0 处取值需要精确的 0
    nodes[np.abs(nodes) < 1e-14] = 0.0
    return nodes, L

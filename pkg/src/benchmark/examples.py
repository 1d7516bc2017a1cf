"""数值实验算例

    (a) g0 = √(1-x²), f = 0
    (b) g0 = 0, f(x,t) = (t+1)^5 (1 + χ_(0,1)(x))
    (c) g0 = √(1-x²), f(x,t) = cos(t) (1 + χ_(0,1)(x))
    mode: g0 = φ_1(x) = sin(π(x+1)/2), f = 0（正弦后端的特征模态问题）

χ_(0,1) 是开区间 (0,1) 的示性函数，x = 0 处取 0。
"""

import math
from typing import Optional

import numpy as np

from ..spatial import chebyshev_laplacian, sine_nodes
from ..stepper import ProblemSpec
from ..utils.exceptions import require


def indicator_open_unit(x: np.ndarray) -> np.ndarray:
    """χ_(0,1)(x)"""
    x = np.asarray(x, dtype=float)
    return ((x > 0.0) & (x < 1.0)).astype(float)


def _polynomial_derivative(l: int) -> float:
    """∂_t^l (t+1)^5 在 t = 0 处的值 5!/(5-l)!"""
    return math.factorial(5) / math.factorial(5 - l) if l <= 5 else 0.0


def _cosine_derivative(l: int) -> float:
    """∂_t^l cos(t) 在 t = 0 处的值 Re(i^l)"""
    return (1.0, 0.0, -1.0, 0.0)[l % 4]


def build_example(
    name: str,
    M: int,
    k: int,
    *,
    alpha: float = 1.7,
    gamma: float = 0.3,
    sigma: float = 0.5,
    T: float = 1.0,
    nodes: Optional[np.ndarray] = None,
) -> ProblemSpec:
    """
    构造算例问题

    Args:
        name: 算例名称 a / b / c / mode
        M: 网格区间数
        k: BDF 阶数（决定提供的初始导数个数 max(k-1, 1)）
        alpha: 空间阶数
        gamma: 时间分数阶
        sigma: 调和参数
        T: 终止时间
        nodes: 内部节点，缺省时 a/b/c 用 Chebyshev 节点，mode 用均匀节点

    Returns:
        ProblemSpec: 问题定义

    示例:
        >>> problem = build_example("b", 4, 3)
        >>> problem.f_derivs0[1].tolist()
        [10.0, 5.0, 5.0]
    """
    require(name in ("a", "b", "c", "mode"), "EXAMPLE_UNKNOWN", name=name)
    if nodes is None:
        nodes = sine_nodes(M) if name == "mode" else chebyshev_laplacian(M)[0]
    x = np.asarray(nodes, dtype=float)
    count = max(k - 1, 1)
    weight = 1.0 + indicator_open_unit(x)
    smooth = np.sqrt(np.clip(1.0 - x ** 2, 0.0, None))

    if name == "a":
        g0 = smooth
        forcing = None
        derivs = [np.zeros_like(x) for _ in range(count)]
    elif name == "b":
        g0 = np.zeros_like(x)

        def forcing(t: float) -> np.ndarray:
            return (t + 1.0) ** 5 * weight

        derivs = [_polynomial_derivative(l) * weight for l in range(count)]
    elif name == "c":
        g0 = smooth

        def forcing(t: float) -> np.ndarray:
            return math.cos(t) * weight

        derivs = [_cosine_derivative(l) * weight for l in range(count)]
    else:
        g0 = np.sin(np.pi * (x + 1.0) / 2.0)
        forcing = None
        derivs = [np.zeros_like(x) for _ in range(count)]

    return ProblemSpec(alpha=alpha, gamma=gamma, sigma=sigma, T=T, g0=g0,
                       forcing=forcing, f_derivs0=tuple(derivs))

"""分数阶卷积求积（CQ）权重

b_j 是 δ(ξ)^γ 的幂级数系数，调和权重 q_j = e^{-σjτ} b_j。
b_j 由多项式幂的 Miller 递推得到，代价 O(k·n)。
"""

from dataclasses import dataclass
from pathlib import Path
from typing import Union

import numpy as np
import pandas as pd

from .generating import bdf_generating_poly, check_order
from ..utils.exceptions import require
from ..utils.logger import get_logger

logger = get_logger("quadrature")


def _check_gamma(gamma: float) -> None:
    require(0.0 < gamma < 1.0, "FRACTIONAL_ORDER_INVALID", gamma=gamma)


def fractional_weights(k: int, gamma: float, n_max: int) -> np.ndarray:
    """
    计算 δ(ξ)^γ 的幂级数系数 b_0..b_{n_max}

    Args:
        k: BDF 阶数
        gamma: 分数阶，0 < γ < 1
        n_max: 最大下标

    Returns:
        np.ndarray: 长度 n_max+1 的权重数组

    示例:
        >>> fractional_weights(1, 0.5, 2)
        array([ 1.   , -0.5  , -0.125])
    """
    check_order(k)
    _check_gamma(gamma)
    require(isinstance(n_max, (int, np.integer)) and n_max >= 0, "WEIGHT_COUNT_INVALID", n_max=n_max)

    c = bdf_generating_poly(k).coeffs
    b = np.empty(n_max + 1)
    b[0] = c[0] ** gamma
    for n in range(1, n_max + 1):
        i = np.arange(1, min(n, k) + 1)
        b[n] = np.dot(((gamma + 1.0) * i - n) * c[i], b[n - i]) / (n * c[0])
    return b


def tempered_weights(b: np.ndarray, sigma: float, tau: float) -> np.ndarray:
    """
    调和权重 q_j = e^{-σjτ} b_j

    Args:
        b: 分数阶权重
        sigma: 调和参数，σ >= 0
        tau: 时间步长，τ > 0

    Returns:
        np.ndarray: 调和后的权重
    """
    require(tau > 0.0, "STEP_SIZE_INVALID", tau=tau)
    require(sigma >= 0.0, "TEMPERING_INVALID", sigma=sigma)
    b = np.asarray(b, dtype=float)
    if sigma == 0.0:
        return b.copy()
    return np.exp(-sigma * tau * np.arange(b.size)) * b


@dataclass(frozen=True)
class WeightSet:
    """一次运行所需的全部 CQ 权重（构造后只读）"""

    k: int
    gamma: float
    sigma: float
    tau: float
    n_max: int
    b: np.ndarray
    q: np.ndarray

    @classmethod
    def build(cls, k: int, gamma: float, sigma: float, tau: float, n_max: int) -> "WeightSet":
        """
        一次性预计算 n_max+1 个权重

        Args:
            k: BDF 阶数
            gamma: 分数阶
            sigma: 调和参数
            tau: 时间步长
            n_max: 最大下标（通常取总步数 N）

        Returns:
            WeightSet: 权重集合
        """
        b = fractional_weights(k, gamma, n_max)
        q = tempered_weights(b, sigma, tau)
        b.setflags(write=False)
        q.setflags(write=False)
        logger.debug("权重已生成: k=%d, γ=%.4g, σ=%.4g, τ=%.4g, n_max=%d", k, gamma, sigma, tau, n_max)
        return cls(k=int(k), gamma=float(gamma), sigma=float(sigma), tau=float(tau),
                   n_max=int(n_max), b=b, q=q)

    @property
    def scale(self) -> float:
        """τ^{-γ}"""
        return self.tau ** (-self.gamma)

    def to_frame(self) -> pd.DataFrame:
        """转换为 DataFrame（列 j, b_j, q_j）"""
        return pd.DataFrame({"j": np.arange(self.n_max + 1), "b_j": self.b, "q_j": self.q})

    def to_csv(self, path: Union[str, Path, None] = None) -> str:
        """
        导出权重 CSV（调试用）

        Args:
            path: 输出路径，None 时只返回文本

        Returns:
            str: CSV 文本
        """
        text = self.to_frame().to_csv(index=False, float_format="%.16e")
        if path is not None:
            Path(path).write_text(text, encoding="utf-8")
        return text

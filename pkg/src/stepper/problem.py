"""问题定义与时间轨迹数据结构"""

from dataclasses import dataclass, field, replace
from typing import Callable, Optional, Tuple

import numpy as np

from ..utils.exceptions import require

Forcing = Callable[[float], np.ndarray]


@dataclass(frozen=True)
class ProblemSpec:
    """
    后向分数阶 Feynman-Kac 方程的离散问题

    Attributes:
        alpha: 空间阶数 (1, 2]
        gamma: 时间分数阶 (0, 1)
        sigma: 调和参数 σ >= 0（σ = 0 即 Caputo 导数）
        T: 终止时间
        g0: 内部节点上的初值
        forcing: f(t)，返回节点上的向量；None 表示 f ≡ 0
        f_derivs0: ∂_t^l f(·, 0)，l = 0, 1, ...（l = 0 即 f(·, 0)）
    """

    alpha: float
    gamma: float
    sigma: float
    T: float
    g0: np.ndarray
    forcing: Optional[Forcing] = None
    f_derivs0: Tuple[np.ndarray, ...] = field(default_factory=tuple)

    def __post_init__(self):
        require(1.0 < self.alpha <= 2.0, "SPACE_ORDER_INVALID", alpha=self.alpha)
        require(0.0 < self.gamma < 1.0, "FRACTIONAL_ORDER_INVALID", gamma=self.gamma)
        require(self.sigma >= 0.0, "TEMPERING_INVALID", sigma=self.sigma)
        require(self.T > 0.0, "FINAL_TIME_INVALID", T=self.T)

        g0 = np.array(self.g0, dtype=float)
        require(g0.ndim == 1 and np.all(np.isfinite(g0)), "INITIAL_DATA_INVALID")
        g0.setflags(write=False)
        object.__setattr__(self, "g0", g0)

        derivs = []
        for deriv in self.f_derivs0:
            deriv = np.array(deriv, dtype=float)
            require(deriv.shape == g0.shape, "DIMENSION_MISMATCH", expected=g0.shape, actual=deriv.shape)
            deriv.setflags(write=False)
            derivs.append(deriv)
        object.__setattr__(self, "f_derivs0", tuple(derivs))

    @property
    def size(self) -> int:
        return self.g0.size

    @property
    def is_homogeneous(self) -> bool:
        """f ≡ 0"""
        return self.forcing is None

    def f(self, t: float) -> np.ndarray:
        """节点上的 f(·, t)"""
        if self.forcing is None:
            return np.zeros(self.size)
        return np.asarray(self.forcing(t), dtype=float)

    def f_derivative0(self, l: int) -> np.ndarray:
        """
        ∂_t^l f(·, 0)

        f ≡ 0 时任意阶导数为零，无需显式给出。
        """
        if self.forcing is None and l >= len(self.f_derivs0):
            return np.zeros(self.size)
        return self.f_derivs0[l]

    def available_derivatives(self) -> int:
        """可用的初始导数个数（f ≡ 0 时不受限）"""
        if self.forcing is None:
            return np.iinfo(np.int64).max
        return len(self.f_derivs0)

    def with_final_time(self, T: float) -> "ProblemSpec":
        """返回终止时间为 T 的副本"""
        return replace(self, T=T)


@dataclass(frozen=True)
class Trajectory:
    """
    时间推进结果 G^0..G^N

    Attributes:
        tau: 时间步长
        values: (N+1, m) 数组，第 n 行为 G^n
    """

    tau: float
    values: np.ndarray

    @property
    def N(self) -> int:
        return self.values.shape[0] - 1

    @property
    def times(self) -> np.ndarray:
        """t_n = nτ"""
        return self.tau * np.arange(self.N + 1)

    @property
    def final(self) -> np.ndarray:
        """G^N"""
        return self.values[-1]

    def __getitem__(self, n: int) -> np.ndarray:
        return self.values[n]

    def __len__(self) -> int:
        return self.values.shape[0]

"""特征模态上的解析解与细步长数值参考解

单个特征模态的系数满足
    G_j(t) = e^{-σt} [ E_{γ,1}(-λ t^γ) v_j + ∫_0^t (t-s)^{γ-1} E_{γ,γ}(-λ(t-s)^γ) e^{σs} f_j(s) ds ]
其中 λ = λ_j^{α/2}。
"""

import math
from typing import Callable, Optional

import numpy as np
from numpy.polynomial.legendre import leggauss

from .mittag_leffler import mittag_leffler
from ..spatial import SpectralOperator
from ..stepper import ProblemSpec, run_corrected
from ..utils.exceptions import QuadratureConvergenceError, require
from ..utils.logger import get_logger

logger = get_logger("reference")

GAUSS_POINTS = 16
INITIAL_LEVELS = 8
LEVEL_INCREMENT = 4
MAX_REFINEMENTS = 8
DEFAULT_FINE_STEPS = 20480


def _check_modal(lambda_frac: float, gamma: float, sigma: float, t: float) -> None:
    require(t >= 0.0, "TIME_NEGATIVE", t=t)
    require(0.0 < gamma <= 1.0, "FRACTIONAL_ORDER_INVALID", gamma=gamma)
    require(sigma >= 0.0, "TEMPERING_INVALID", sigma=sigma)
    require(lambda_frac >= 0.0, "EIGENVALUE_NOT_POSITIVE", value=lambda_frac)


def eigenmode_solution(lambda_frac: float, gamma: float, sigma: float, t: float, v_coef: float = 1.0) -> float:
    """
    齐次问题（f = 0）的模态系数 v · e^{-σt} · E_{γ,1}(-λ t^γ)

    Args:
        lambda_frac: λ_j^{α/2}
        gamma: 时间分数阶，0 < γ <= 1
        sigma: 调和参数
        t: 时间，t >= 0
        v_coef: 初值的模态系数

    Returns:
        float: t 时刻的模态系数

    示例:
        >>> eigenmode_solution(2.0, 0.5, 0.0, 0.0, 3.0)
        3.0
    """
    _check_modal(lambda_frac, gamma, sigma, t)
    if t == 0.0:
        return float(v_coef)
    return v_coef * math.exp(-sigma * t) * mittag_leffler(gamma, 1.0, -lambda_frac * t ** gamma)


def _graded_rule(levels: int, panels: int):
    """[0,1] 上按二进分层的复合 Gauss-Legendre 节点与权重"""
    x, w = leggauss(GAUSS_POINTS)
    edges = np.concatenate(([0.0], 2.0 ** -np.arange(levels, -1, -1, dtype=float)))
    nodes, weights = [], []
    for a, b in zip(edges[:-1], edges[1:]):
        sub = np.linspace(a, b, panels + 1)
        for lo, hi in zip(sub[:-1], sub[1:]):
            half = 0.5 * (hi - lo)
            nodes.append(lo + half * (x + 1.0))
            weights.append(half * w)
    return np.concatenate(nodes), np.concatenate(weights)


def inhomogeneous_eigenmode_solution(
    lambda_frac: float,
    gamma: float,
    sigma: float,
    t: float,
    f_coef: Optional[Callable[[float], float]],
    v_coef: float = 0.0,
    rtol: float = 1e-8,
) -> float:
    """
    含源项的模态系数

    卷积积分作代换 u = t·v^{1/γ} 后核的奇性被吸收：
        ∫_0^1 (t^γ/γ) E_{γ,γ}(-λ t^γ v) e^{-σu} f(t-u) dv
    用二进分层复合 Gauss 规则计算，逐次加层加密直到相邻结果相对差小于 rtol。

    Args:
        lambda_frac: λ_j^{α/2}（允许 0）
        gamma: 时间分数阶
        sigma: 调和参数
        t: 时间
        f_coef: 源项的模态系数 f_j(s)；None 表示 0
        v_coef: 初值的模态系数
        rtol: 相对收敛容差

    Returns:
        float: t 时刻的模态系数

    Raises:
        QuadratureConvergenceError: 加密 MAX_REFINEMENTS 次仍未收敛
    """
    _check_modal(lambda_frac, gamma, sigma, t)
    homogeneous = eigenmode_solution(lambda_frac, gamma, sigma, t, v_coef)
    if f_coef is None or t == 0.0:
        return homogeneous

    t_gamma = t ** gamma

    def integrand(v: float) -> float:
        u = t * v ** (1.0 / gamma)
        kernel = mittag_leffler(gamma, gamma, -lambda_frac * t_gamma * v)
        return kernel * math.exp(-sigma * u) * float(f_coef(t - u))

    levels, panels = INITIAL_LEVELS, 1
    previous = math.nan
    for _ in range(MAX_REFINEMENTS):
        nodes, weights = _graded_rule(levels, panels)
        current = (t_gamma / gamma) * math.fsum(weights * np.array([integrand(v) for v in nodes]))
        if np.isfinite(previous) and abs(current - previous) <= rtol * max(abs(current), 1e-300):
            logger.debug("卷积积分收敛: levels=%d, panels=%d, value=%.12e", levels, panels, current)
            return homogeneous + current
        previous = current
        levels += LEVEL_INCREMENT
        panels *= 2

    raise QuadratureConvergenceError(previous=previous, current=current)


def fine_step_oracle(
    problem: ProblemSpec,
    op: SpectralOperator,
    t: float,
    n_fine: int = DEFAULT_FINE_STEPS,
    order: int = 2,
) -> np.ndarray:
    """
    细步长修正 BDF 数值参考解

    Args:
        problem: 问题定义（终止时间被 t 替换）
        op: 分数阶算子
        t: 目标时间
        n_fine: 步数
        order: 修正 BDF 阶数

    Returns:
        np.ndarray: t 时刻节点上的解
    """
    require(t >= 0.0, "TIME_NEGATIVE", t=t)
    if t == 0.0:
        return np.array(problem.g0)
    logger.debug("细步长参考解: t=%.4g, n_fine=%d, BDF%d", t, n_fine, order)
    return np.array(run_corrected(problem.with_final_time(t), op, order, n_fine).final)

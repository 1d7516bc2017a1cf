"""BDFk 卷积求积时间推进

在平移变量 W^n = G^n - e^{-σt_n} G^0 上推进，每步求解
    (τ^{-γ} q_0 I + A) W^n = f(t_n) - e^{-σt_n} A G^0 - τ^{-γ} Σ_{j=1}^{n} q_j W^{n-j}
修正格式在 1 <= n <= k-1 时加入起始修正源项：
    -a_n e^{-σt_n} A G^0 + b_n f(0) + Σ_{l=1}^{k-2} d_{l,n} τ^l ∂_t^l f(0)
"""

import math
from typing import Optional, Sequence, Union

import numpy as np

from .problem import ProblemSpec, Trajectory
from ..quadrature import WeightSet, correction_table
from ..quadrature.corrections import CorrectionTable
from ..quadrature.generating import check_order
from ..spatial import ShiftedSolver, SpectralOperator
from ..utils.exceptions import SolverBlowUpError, require
from ..utils.logger import get_logger

logger = get_logger("stepper")

BLOW_UP_FACTOR = 1e12


def history_convolution(
    weights: WeightSet,
    W_history: Union[np.ndarray, Sequence[np.ndarray]],
    n: int,
) -> np.ndarray:
    """
    卷积历史项 τ^{-γ} Σ_{j=1}^{n} q_j W^{n-j}（j = 0 项在隐式左端）

    Args:
        weights: 权重集合
        W_history: 至少包含 W^0..W^{n-1}
        n: 当前步

    Returns:
        np.ndarray: 历史项向量

    Raises:
        IndexError: n 超出权重或历史范围
    """
    history = np.asarray(W_history, dtype=float)
    if n < 0 or n > weights.n_max or n > history.shape[0]:
        raise IndexError(f"history index n={n} outside [0, {min(weights.n_max, history.shape[0])}]")
    if n == 0:
        return np.zeros(history.shape[1:])
    # W^{n-1}, W^{n-2}, ..., W^0
    lagged = history[n - 1::-1]
    return weights.scale * (weights.q[1:n + 1] @ lagged)


def _correction_source(
    table: CorrectionTable,
    problem: ProblemSpec,
    n: int,
    tau: float,
    decay: float,
    AG0: np.ndarray,
) -> np.ndarray:
    source = -table.a_n(n) * decay * AG0 + table.b_n(n) * problem.f_derivative0(0)
    for l in range(1, table.k - 1):
        d = table.d_ln(l, n)
        if d != 0.0:
            source = source + d * tau ** l * problem.f_derivative0(l)
    return source


def _check_run(problem: ProblemSpec, op: SpectralOperator, k: int, N: int, corrected: bool) -> None:
    check_order(k)
    require(isinstance(N, (int, np.integer)) and N >= k, "STEP_COUNT_INVALID", N=N, k=k)
    require(math.isclose(problem.alpha, op.alpha, rel_tol=0.0, abs_tol=1e-12),
            "ALPHA_MISMATCH", problem=problem.alpha, operator=op.alpha)
    require(problem.size == op.size, "DIMENSION_MISMATCH", expected=op.size, actual=problem.size)
    if corrected:
        needed = max(k - 1, 0)
        given = problem.available_derivatives()
        require(given >= needed, "DERIVATIVES_MISSING", k=k, needed=needed, given=given)


def _march(problem: ProblemSpec, op: SpectralOperator, k: int, N: int, corrected: bool) -> Trajectory:
    _check_run(problem, op, k, N, corrected)
    N = int(N)
    tau = problem.T / N
    weights = WeightSet.build(k, problem.gamma, problem.sigma, tau, N)
    solver = ShiftedSolver(op, weights.scale * weights.q[0])
    table: Optional[CorrectionTable] = correction_table(k) if corrected else None

    m = problem.size
    g0 = problem.g0
    AG0 = op.matrix @ g0
    limit = BLOW_UP_FACTOR * (1.0 + float(np.max(np.abs(g0), initial=0.0)))

    W = np.zeros((N + 1, m))
    G = np.empty((N + 1, m))
    G[0] = g0

    for n in range(1, N + 1):
        t_n = n * tau
        decay = math.exp(-problem.sigma * t_n)
        rhs = problem.f(t_n) - decay * AG0 - history_convolution(weights, W, n)
        if table is not None and n <= table.steps:
            rhs += _correction_source(table, problem, n, tau, decay, AG0)
        W[n] = solver.solve(rhs)
        G[n] = W[n] + decay * g0

        norm = float(np.max(np.abs(G[n])))
        if not np.all(np.isfinite(G[n])) or norm > limit:
            raise SolverBlowUpError(step=n, norm=norm if np.isfinite(norm) else float("inf"), limit=limit)

    logger.debug("%s BDF%d 完成: N=%d, τ=%.4g, ‖G^N‖∞=%.4e",
                 "修正" if corrected else "标准", k, N, tau, float(np.max(np.abs(G[-1]))))
    G.setflags(write=False)
    return Trajectory(tau=tau, values=G)


def run_standard(problem: ProblemSpec, op: SpectralOperator, k: int, N: int) -> Trajectory:
    """
    标准 BDFk 卷积求积

    Args:
        problem: 问题定义
        op: 分数阶算子（α 须与 problem 一致）
        k: BDF 阶数
        N: 步数，N >= k

    Returns:
        Trajectory: G^0..G^N

    Raises:
        ParameterError: 参数不合法
        SolverBlowUpError: 出现非有限值或超过爆破阈值
    """
    return _march(problem, op, k, N, corrected=False)


def run_corrected(problem: ProblemSpec, op: SpectralOperator, k: int, N: int) -> Trajectory:
    """
    修正 BDFk 卷积求积（前 k-1 步加入起始修正）

    需要 problem 提供 ∂_t^l f(·, 0)，l = 0..k-2。k = 1 时与 run_standard 逐位相同。

    Args:
        problem: 问题定义
        op: 分数阶算子
        k: BDF 阶数
        N: 步数，N >= k

    Returns:
        Trajectory: G^0..G^N
    """
    return _march(problem, op, k, N, corrected=True)


def run_scheme(problem: ProblemSpec, op: SpectralOperator, scheme: str, k: int, N: int) -> Trajectory:
    """按名称（"standard" / "corrected"）运行格式"""
    require(scheme in ("standard", "corrected"), "CONFIG_INVALID_VALUE", name="scheme", value=scheme)
    return _march(problem, op, k, N, corrected=(scheme == "corrected"))


def scheme_residual(
    problem: ProblemSpec,
    op: SpectralOperator,
    k: int,
    trajectory: Trajectory,
    corrected: bool = True,
) -> np.ndarray:
    """
    将 G^n 代回离散方程的逐步相对残差

    r_n = ‖τ^{-γ} Σ_{j=0}^{n} q_j W^{n-j} + A G^n - f(t_n) - 修正项‖∞ / (‖A G^n‖∞ + ‖f(t_n)‖∞)，
    其中 W^j 由 G^j 重构。

    Returns:
        np.ndarray: 长度 N 的残差（n = 1..N）
    """
    N = trajectory.N
    _check_run(problem, op, k, N, corrected)
    tau = trajectory.tau
    weights = WeightSet.build(k, problem.gamma, problem.sigma, tau, N)
    table = correction_table(k) if corrected else None

    g0 = problem.g0
    AG0 = op.matrix @ g0
    decays = np.exp(-problem.sigma * trajectory.times)
    W = trajectory.values - decays[:, None] * g0[None, :]

    residuals = np.empty(N)
    for n in range(1, N + 1):
        f_n = problem.f(n * tau)
        AG_n = op.matrix @ trajectory.values[n]
        lhs = weights.scale * weights.q[0] * W[n] + history_convolution(weights, W, n) + AG_n
        rhs = f_n.copy()
        if table is not None and n <= table.steps:
            rhs += _correction_source(table, problem, n, tau, decays[n], AG0)
        scale = float(np.max(np.abs(AG_n)) + np.max(np.abs(f_n)))
        residuals[n - 1] = float(np.max(np.abs(lhs - rhs))) / (scale if scale > 0.0 else 1.0)
    return residuals

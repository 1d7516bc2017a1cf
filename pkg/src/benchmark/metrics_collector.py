"""收敛误差与速率收集器"""

import math
from typing import Dict, List, Optional, Sequence, Tuple

import numpy as np

from .experiment_config import ExperimentConfig
from .results import CellResult, ConvergenceRow


def max_norm_difference(u: np.ndarray, v: np.ndarray) -> float:
    """‖u - v‖∞"""
    return float(np.max(np.abs(np.asarray(u) - np.asarray(v))))


def convergence_rates(errors: Sequence[float]) -> List[float]:
    """
    相邻二倍加密的收敛速率 log2(e_{N/2} / e_N)

    Args:
        errors: 按 N 升序（每次翻倍）排列的误差

    Returns:
        List[float]: 与 errors 等长，首项以及误差非正或非有限时为 NaN

    示例:
        >>> convergence_rates([0.5, 0.125])
        [nan, 2.0]
    """
    rates = [math.nan]
    for previous, current in zip(errors[:-1], errors[1:]):
        if all(np.isfinite(e) and e > 0.0 for e in (previous, current)):
            rates.append(math.log2(previous / current))
        else:
            rates.append(math.nan)
    return rates[:len(errors)]


class ConvergenceCollector:
    """收集各 (k, N) 运行结果并计算误差与速率"""

    def __init__(self, config: ExperimentConfig, reference: Optional[np.ndarray] = None):
        """
        初始化收集器

        Args:
            config: 实验配置
            reference: 精确参考解（reference="exact" 时必需）
        """
        self.config = config
        self.reference = reference
        self.cells: Dict[Tuple[int, int], CellResult] = {}

    def add_result(self, cell: CellResult):
        """
        添加单次运行结果

        Args:
            cell: 运行结果
        """
        self.cells[(cell.k, cell.N)] = cell

    def get_cell(self, k: int, N: int) -> Optional[CellResult]:
        return self.cells.get((k, N))

    def _error(self, k: int, N: int) -> Tuple[float, str]:
        """e_N 与失败诊断"""
        coarse = self.get_cell(k, N)
        if coarse is None or not coarse.success:
            return math.nan, coarse.error_message if coarse else "missing run"

        if self.config.reference == "exact":
            return max_norm_difference(coarse.final, self.reference), ""

        fine = self.get_cell(k, 2 * N)
        if fine is None or not fine.success:
            return math.nan, f"N={2 * N}: " + (fine.error_message if fine else "missing run")
        return max_norm_difference(coarse.final, fine.final), ""

    def build_rows(self) -> List[ConvergenceRow]:
        """
        按 (k, N) 顺序生成收敛表

        Returns:
            List[ConvergenceRow]: 每个 k 的每个 N 一行
        """
        cfg = self.config
        rows: List[ConvergenceRow] = []
        for k in cfg.k_list:
            results = [self._error(k, N) for N in cfg.N_list]
            errors = [error for error, _ in results]
            rates = convergence_rates(errors)
            for N, (error, message), rate in zip(cfg.N_list, results, rates):
                rows.append(ConvergenceRow(
                    example=cfg.example,
                    scheme=cfg.scheme,
                    alpha=cfg.alpha,
                    gamma=cfg.gamma,
                    k=k,
                    N=N,
                    error=error,
                    rate=rate,
                    status="ok" if not message else "failed",
                    message=message,
                ))
        return rows

"""收敛实验执行器"""

import time
from concurrent.futures import ThreadPoolExecutor, as_completed
from typing import Callable, List, Optional, Tuple

import numpy as np
from tqdm import tqdm

from .examples import build_example
from .experiment_config import ExperimentConfig
from .metrics_collector import ConvergenceCollector
from .results import CellResult, ConvergenceReport
from ..reference import eigenmode_solution
from ..spatial import SpectralOperator, build_operator
from ..stepper import ProblemSpec, run_scheme
from ..utils.exceptions import FKACError
from ..utils.logger import get_logger

logger = get_logger("benchmark")


class StudyRunner:
    """收敛实验执行器：同一空间网格上运行 (k, N) 网格并计算误差与速率"""

    def __init__(self, config: ExperimentConfig):
        """
        初始化执行器

        Args:
            config: 实验配置
        """
        self.config = config
        self.operator: SpectralOperator = build_operator(config.backend, config.M, config.alpha)
        self._problems = {}

    def problem(self, k: int) -> ProblemSpec:
        """阶数 k 的问题（同一配置下各阶数只差初始导数个数）"""
        if k not in self._problems:
            cfg = self.config
            self._problems[k] = build_example(
                cfg.example, cfg.M, k,
                alpha=cfg.alpha, gamma=cfg.gamma, sigma=cfg.sigma, T=cfg.T,
                nodes=self.operator.nodes,
            )
        return self._problems[k]

    def exact_reference(self) -> np.ndarray:
        """
        特征模态问题的精确终值 e^{-σT} E_{γ,1}(-λ_1^{α/2} T^γ) φ_1

        Returns:
            np.ndarray: 节点上的参考解
        """
        cfg = self.config
        problem = self.problem(cfg.k_list[0])
        coef = eigenmode_solution(float(self.operator.eigenvalues[0]), cfg.gamma, cfg.sigma, cfg.T, 1.0)
        return coef * problem.g0

    def run_cell(self, k: int, N: int) -> CellResult:
        """
        运行单个 (k, N)，数值或参数失败转为失败结果而不抛出

        Args:
            k: BDF 阶数
            N: 步数

        Returns:
            CellResult: 运行结果
        """
        start = time.perf_counter()
        try:
            trajectory = run_scheme(self.problem(k), self.operator, self.config.scheme, k, N)
            final = np.array(trajectory.final)
            return CellResult(k=k, N=N, final=final, elapsed_s=time.perf_counter() - start)
        except (FKACError, np.linalg.LinAlgError) as e:
            logger.warning("运行失败 (k=%d, N=%d): %s", k, N, e)
            return CellResult(k=k, N=N, elapsed_s=time.perf_counter() - start,
                              success=False, error_message=str(e))

    def jobs(self) -> List[Tuple[int, int]]:
        """全部 (k, N) 运行"""
        return [(k, N) for k in self.config.k_list for N in self.config.step_counts]

    def run(
        self,
        show_progress: bool = False,
        progress_callback: Optional[Callable[[int, int], None]] = None,
    ) -> ConvergenceReport:
        """
        运行完整收敛实验

        各 (k, N) 相互独立，可并行；结果按 (k, N) 键收集，与完成顺序无关。

        Args:
            show_progress: 是否显示进度条
            progress_callback: 进度回调函数，参数为(已完成运行数, 总运行数)

        Returns:
            ConvergenceReport: 收敛报告
        """
        cfg = self.config
        jobs = self.jobs()
        for k in cfg.k_list:
            self.problem(k)
        reference = self.exact_reference() if cfg.reference == "exact" else None
        collector = ConvergenceCollector(cfg, reference=reference)

        logger.info("开始收敛实验: 算例 %s, %s 格式, α=%.4g, γ=%.4g, %d 次运行",
                    cfg.example, cfg.scheme, cfg.alpha, cfg.gamma, len(jobs))

        progress = tqdm(total=len(jobs), desc=f"算例 {cfg.example} ({cfg.scheme})", disable=not show_progress)
        completed = 0
        with ThreadPoolExecutor(max_workers=cfg.workers) as executor:
            futures = {executor.submit(self.run_cell, k, N): (k, N) for k, N in jobs}
            for future in as_completed(futures):
                collector.add_result(future.result())
                completed += 1
                progress.update(1)
                if progress_callback:
                    progress_callback(completed, len(jobs))
        progress.close()

        report = ConvergenceReport(rows=collector.build_rows(), metadata={"config": cfg.echo()})
        if report.has_failures:
            logger.warning("%d 行存在失败的运行", len(report.failed))
        return report


def run_convergence_study(config: ExperimentConfig, show_progress: bool = False) -> ConvergenceReport:
    """
    运行收敛实验

    Args:
        config: 实验配置
        show_progress: 是否显示进度条

    Returns:
        ConvergenceReport: 收敛报告
    """
    return StudyRunner(config).run(show_progress=show_progress)

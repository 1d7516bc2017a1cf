"""收敛实验模块"""

from .examples import build_example, indicator_open_unit
from .experiment_config import EXAMPLES, SCHEMES, ExperimentConfig
from .metrics_collector import ConvergenceCollector, convergence_rates, max_norm_difference
from .results import CellResult, ConvergenceReport, ConvergenceRow
from .runner import StudyRunner, run_convergence_study

__all__ = [
    "build_example",
    "indicator_open_unit",
    "EXAMPLES",
    "SCHEMES",
    "ExperimentConfig",
    "ConvergenceCollector",
    "convergence_rates",
    "max_norm_difference",
    "CellResult",
    "ConvergenceReport",
    "ConvergenceRow",
    "StudyRunner",
    "run_convergence_study",
]

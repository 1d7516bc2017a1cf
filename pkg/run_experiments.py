"""收敛实验命令行入口

子命令：
- solve: 单次求解，打印终值摘要，可导出解
- study: 收敛实验（误差与速率表），--case 运行注册的收敛表用例
- weights: 导出 CQ 权重 CSV（列 j, b_j, q_j）
- cases: 列出注册的研究用例

配置文件是扁平 YAML 键值文件，键名与参数同名（tfinal、mgrid、orders …），
命令行显式给出的参数覆盖文件中的值。

退出码: 0 成功, 1 参数错误, 2 数值失败（含 study 中任一单元失败）, 130 用户中断

使用示例：
    python run_experiments.py study --example a --scheme corrected --alpha 1.7 --gamma 0.3
    python run_experiments.py study --case corrected_c --format csv --out results/c.csv
    python run_experiments.py solve --example c --order 3 --nsteps 160 --dump-solution g.csv
    python run_experiments.py weights --order 3 --gamma 0.7 --sigma 0.5 --tau 0.01 --count 8
"""

import argparse
import sys
import time
from pathlib import Path
from typing import Any, Dict, List, Optional

import numpy as np
import pandas as pd

# 添加项目根目录到 Python 路径
project_root = Path(__file__).parent
sys.path.insert(0, str(project_root))

from src.benchmark import ExperimentConfig, StudyRunner, build_example
from src.benchmark.results import ConvergenceReport
from src.experiments import registry
from src.quadrature import WeightSet
from src.report import render_report
from src.spatial import build_operator
from src.stepper import run_scheme
from src.utils import save_report_json
from src.utils.config_loader import (
    get_default_workers,
    load_flat_config,
    merge_cli_overrides,
    parse_int_list,
)
from src.utils.exceptions import FKACError, NumericalError, ParameterError
from src.utils.logger import get_logger, setup_logger

logger = get_logger("cli")

EXIT_OK = 0
EXIT_BAD_ARGUMENTS = 1
EXIT_NUMERICAL = 2
EXIT_INTERRUPTED = 130

# 各子命令可从配置文件读取的键
SOLVE_KEYS = {"example", "scheme", "order", "nsteps", "alpha", "gamma", "sigma", "tfinal", "mgrid",
              "backend", "dump_solution", "dump_trajectory"}
STUDY_KEYS = {"case", "example", "scheme", "alpha", "gamma", "sigma", "tfinal", "mgrid", "orders",
              "nsteps", "format", "out", "json", "workers", "backend", "reference"}
WEIGHTS_KEYS = {"order", "gamma", "sigma", "tau", "count", "out"}


class _ArgumentParser(argparse.ArgumentParser):
    """参数错误以退出码 1 结束（argparse 默认是 2，与数值失败冲突）"""

    def error(self, message: str):
        self.print_usage(sys.stderr)
        self.exit(EXIT_BAD_ARGUMENTS, f"{self.prog}: 错误: {message}\n")


# ============ 参数整理 ============

def _collect(args: argparse.Namespace, keys: set) -> Dict[str, Any]:
    """配置文件 + 命令行参数，命令行优先"""
    cli_values = {key: getattr(args, key, None) for key in keys}
    file_values: Dict[str, Any] = {}
    if getattr(args, "config", None):
        raw = load_flat_config(args.config)
        ignored = sorted(set(raw) - keys)
        if ignored:
            logger.debug("配置文件中与 %s 无关的键被忽略: %s", args.command, ", ".join(ignored))
        file_values = {key: value for key, value in raw.items() if key in keys}
    return merge_cli_overrides(file_values, cli_values)


def _single_int(values: Dict[str, Any], key: str) -> Optional[int]:
    if values.get(key) is None:
        return None
    items = parse_int_list(values[key], key)
    if len(items) != 1:
        raise ParameterError(f"'{key}' 需要单个整数, 得到 {values[key]}")
    return items[0]


def _optional_list(values: Dict[str, Any], key: str) -> Optional[List[int]]:
    return parse_int_list(values[key], key) if values.get(key) is not None else None


def _output_format(value: Optional[str]) -> Optional[str]:
    if value is None:
        return None
    return "markdown" if value in ("md", "markdown") else value


def _float(values: Dict[str, Any], key: str) -> Optional[float]:
    if values.get(key) is None:
        return None
    try:
        return float(values[key])
    except (TypeError, ValueError) as exc:
        raise ParameterError(f"'{key}' 需要实数, 得到 {values[key]}") from exc


def _study_fields(values: Dict[str, Any]) -> Dict[str, Any]:
    """把参数名映射为 ExperimentConfig 字段"""
    return {
        "example": values.get("example"),
        "scheme": values.get("scheme"),
        "alpha": _float(values, "alpha"),
        "gamma": _float(values, "gamma"),
        "sigma": _float(values, "sigma"),
        "T": _float(values, "tfinal"),
        "M": _single_int(values, "mgrid"),
        "k_list": _optional_list(values, "orders"),
        "N_list": _optional_list(values, "nsteps"),
        "output": _output_format(values.get("format")),
        "backend": values.get("backend"),
        "reference": values.get("reference"),
        "workers": _single_int(values, "workers"),
    }


def _emit(text: str, out: Optional[str]) -> None:
    if out:
        path = Path(out)
        path.parent.mkdir(parents=True, exist_ok=True)
        path.write_text(text, encoding="utf-8")
        print(f"✓ 已保存: {path}", file=sys.stderr)
    else:
        sys.stdout.write(text)


# ============ 子命令 ============

def cmd_solve(args: argparse.Namespace) -> int:
    """单次求解"""
    values = _collect(args, SOLVE_KEYS)
    order = _single_int(values, "order")
    order = 2 if order is None else order
    nsteps = _single_int(values, "nsteps")
    nsteps = 160 if nsteps is None else nsteps
    fields = _study_fields(values)
    fields.update(k_list=[order], N_list=[nsteps])
    config = ExperimentConfig.from_values(**fields)

    op = build_operator(config.backend, config.M, config.alpha)
    problem = build_example(config.example, config.M, order, alpha=config.alpha, gamma=config.gamma,
                            sigma=config.sigma, T=config.T, nodes=op.nodes)
    start = time.perf_counter()
    trajectory = run_scheme(problem, op, config.scheme, order, nsteps)
    elapsed = time.perf_counter() - start

    print(f"算例 {config.example} · {config.scheme} BDF{order} · N={nsteps} · M={config.M}", file=sys.stderr)
    print(f"  ‖G^N(T)‖∞ = {np.max(np.abs(trajectory.final)):.10e}", file=sys.stderr)
    print(f"  耗时 {elapsed:.3f} s", file=sys.stderr)

    if values.get("dump_solution"):
        frame = pd.DataFrame({"x": op.nodes, "G_T": trajectory.final})
        _emit(frame.to_csv(index=False, float_format="%.16e", lineterminator="\n"), values["dump_solution"])
    if values.get("dump_trajectory"):
        columns = {"x": op.nodes}
        columns.update({f"t_{n}": trajectory[n] for n in range(trajectory.N + 1)})
        frame = pd.DataFrame(columns)
        _emit(frame.to_csv(index=False, float_format="%.16e", lineterminator="\n"), values["dump_trajectory"])
    return EXIT_OK


def _study_configs(values: Dict[str, Any]) -> List[ExperimentConfig]:
    fields = _study_fields(values)
    if fields["workers"] is None:
        fields["workers"] = get_default_workers()
    if values.get("case"):
        case = registry.get_case(values["case"])
        overrides = {key: fields[key] for key in ("sigma", "T", "M", "k_list", "N_list", "workers")}
        return case.expand(**overrides)
    return [ExperimentConfig.from_values(**fields)]


def cmd_study(args: argparse.Namespace) -> int:
    """收敛实验"""
    values = _collect(args, STUDY_KEYS)
    configs = _study_configs(values)
    fmt = _output_format(values.get("format")) or configs[0].output

    reports = [StudyRunner(cfg).run(show_progress=args.progress) for cfg in configs]
    report = reports[0] if len(reports) == 1 else ConvergenceReport.combine(reports, case=values.get("case"))

    _emit(render_report(report, fmt), values.get("out"))
    if values.get("json"):
        path = save_report_json(report, values["json"])
        print(f"✓ JSON 已保存: {path}", file=sys.stderr)

    if report.has_failures:
        print(f"⚠️  {len(report.failed)} 行存在失败的运行", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


def cmd_weights(args: argparse.Namespace) -> int:
    """导出 CQ 权重"""
    values = _collect(args, WEIGHTS_KEYS)
    order = _single_int(values, "order")
    order = 2 if order is None else order
    count = _single_int(values, "count")
    count = 16 if count is None else count
    gamma = _float(values, "gamma")
    sigma = _float(values, "sigma")
    tau = _float(values, "tau")
    weights = WeightSet.build(order, 0.5 if gamma is None else gamma, 0.0 if sigma is None else sigma,
                              0.01 if tau is None else tau, count)
    _emit(weights.to_csv(), values.get("out"))
    return EXIT_OK


def cmd_cases(args: argparse.Namespace) -> int:
    """列出研究用例"""
    for category in registry.get_categories():
        print(f"[{category}]")
        for case in registry.get_cases_by_category(category):
            pairs = ", ".join(f"({a:g}, {g:g})" for a, g in case.parameter_pairs)
            print(f"  {case.name:<18} 算例 {case.example:<5} {case.scheme:<10} (α, γ): {pairs}  {case.description}")
    return EXIT_OK


# ============ 主函数 ============

def build_parser() -> argparse.ArgumentParser:
    """构造命令行解析器"""
    parser = _ArgumentParser(
        description="后向分数阶 Feynman-Kac 方程的修正 BDF 卷积求积实验",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
示例：
  python run_experiments.py study                             # 默认: 算例 a, 修正格式, k=2..6
  python run_experiments.py study --case standard_c --format csv
  python run_experiments.py solve --example b --order 4 --nsteps 320
  python run_experiments.py cases
        """
    )
    subparsers = parser.add_subparsers(dest="command", required=True, parser_class=_ArgumentParser)

    def add_problem_options(sub: argparse.ArgumentParser):
        sub.add_argument('--config', help='扁平 YAML 配置文件（命令行参数优先）')
        sub.add_argument('--example', choices=['a', 'b', 'c', 'mode'], help='算例')
        sub.add_argument('--scheme', choices=['standard', 'corrected'], help='时间格式')
        sub.add_argument('--alpha', type=float, help='空间阶数 α ∈ (1, 2]')
        sub.add_argument('--gamma', type=float, help='时间分数阶 γ ∈ (0, 1)')
        sub.add_argument('--sigma', type=float, help='调和参数 σ >= 0')
        sub.add_argument('--tfinal', type=float, help='终止时间 T')
        sub.add_argument('--mgrid', type=int, help='空间网格区间数 M')
        sub.add_argument('--backend', choices=['chebyshev', 'sine'], help='空间离散后端')

    solve = subparsers.add_parser('solve', help='单次求解')
    add_problem_options(solve)
    solve.add_argument('--order', type=int, help='BDF 阶数 k')
    solve.add_argument('--nsteps', type=int, help='时间步数 N')
    solve.add_argument('--dump-solution', dest='dump_solution', help='终值 CSV 输出路径（列 x, G_T）')
    solve.add_argument('--dump-trajectory', dest='dump_trajectory', help='全部时间层 CSV 输出路径')
    solve.set_defaults(handler=cmd_solve)

    study = subparsers.add_parser('study', help='收敛实验')
    add_problem_options(study)
    study.add_argument('--case', help='注册的研究用例名（见 cases 子命令）')
    study.add_argument('--orders', help='阶数列表，如 2,3,4,5,6')
    study.add_argument('--nsteps', help='步数列表（逐项翻倍），如 40,80,160,320')
    study.add_argument('--format', choices=['csv', 'md', 'markdown'], help='输出格式')
    study.add_argument('--out', help='报告输出路径（缺省输出到 stdout）')
    study.add_argument('--json', help='JSON 存档路径')
    study.add_argument('--workers', type=int, help='并行线程数（缺省读取 FKAC_WORKERS）')
    study.add_argument('--reference', choices=['self', 'exact'], help='误差参考：自比较或精确解')
    study.add_argument('--progress', action='store_true', help='显示进度条')
    study.set_defaults(handler=cmd_study)

    weights = subparsers.add_parser('weights', help='导出 CQ 权重')
    weights.add_argument('--config', help='扁平 YAML 配置文件')
    weights.add_argument('--order', type=int, help='BDF 阶数 k')
    weights.add_argument('--gamma', type=float, help='分数阶 γ')
    weights.add_argument('--sigma', type=float, help='调和参数 σ')
    weights.add_argument('--tau', type=float, help='时间步长 τ')
    weights.add_argument('--count', type=int, help='最大下标 n_max')
    weights.add_argument('--out', help='CSV 输出路径（缺省输出到 stdout）')
    weights.set_defaults(handler=cmd_weights)

    cases = subparsers.add_parser('cases', help='列出研究用例')
    cases.set_defaults(handler=cmd_cases)
    return parser


def main(argv: Optional[List[str]] = None) -> int:
    """
    主函数

    Args:
        argv: 命令行参数（缺省为 sys.argv[1:]）

    Returns:
        int: 退出码
    """
    setup_logger()
    args = build_parser().parse_args(argv)
    try:
        return args.handler(args)
    except ParameterError as e:
        print(f"❌ 参数错误: {e}", file=sys.stderr)
        return EXIT_BAD_ARGUMENTS
    except NumericalError as e:
        print(f"❌ 数值失败: {e}", file=sys.stderr)
        return EXIT_NUMERICAL
    except FKACError as e:
        print(f"❌ 发生错误: {e}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    try:
        sys.exit(main())
    except KeyboardInterrupt:
        print("\n\n⚠️  实验被用户中断", file=sys.stderr)
        sys.exit(EXIT_INTERRUPTED)

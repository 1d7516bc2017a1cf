"""收敛报告渲染

CSV：列 example, scheme, k, N, error, rate，浮点数按 5 位有效数字科学计数法输出。
Markdown：每组 (算例, 格式, α, γ) 一张表，行为阶数 k，列为各 N 的误差，末列为最后一对 N 的速率。
"""

from collections import OrderedDict
from typing import Dict, List, Tuple

from .formatters import NumberFormatter, TableFormatter
from ..benchmark.results import ConvergenceReport, ConvergenceRow
from ..utils.exceptions import require

CSV_COLUMNS = ["example", "scheme", "k", "N", "error", "rate"]
FORMATS = ("csv", "markdown", "md")


def render_csv(report: ConvergenceReport) -> str:
    """渲染 CSV 文本（空报告只有表头）"""
    frame = report.to_frame()[CSV_COLUMNS]
    return frame.to_csv(index=False, float_format=NumberFormatter.ERROR_FORMAT, na_rep="nan",
                        lineterminator="\n")


def _group_rows(report: ConvergenceReport) -> "OrderedDict[Tuple, List[ConvergenceRow]]":
    groups: "OrderedDict[Tuple, List[ConvergenceRow]]" = OrderedDict()
    for row in report.rows:
        groups.setdefault((row.example, row.scheme, row.alpha, row.gamma), []).append(row)
    return groups


def _render_group(key: Tuple, rows: List[ConvergenceRow]) -> str:
    example, scheme, alpha, gamma = key
    step_counts = sorted({row.N for row in rows})
    by_order: Dict[int, Dict[int, ConvergenceRow]] = OrderedDict()
    for row in rows:
        by_order.setdefault(row.k, {})[row.N] = row

    md = f"### 算例 {example} · {scheme} · {NumberFormatter.format_parameters(alpha, gamma)}\n\n"
    md += TableFormatter.create_table_header(["k"] + [f"N={N}" for N in step_counts] + ["Rate"])
    notes = []
    for k, cells in by_order.items():
        errors = [NumberFormatter.format_error(cells[N].error) if N in cells else NumberFormatter.MISSING
                  for N in step_counts]
        last = cells[max(cells)]
        md += TableFormatter.create_table_row([k] + errors + [NumberFormatter.format_rate(last.rate)])
        notes.extend(f"- k={k}, N={N}: {cell.message}" for N, cell in sorted(cells.items())
                     if cell.status != "ok")
    if notes:
        md += "\n" + "\n".join(notes) + "\n"
    return md


def render_markdown(report: ConvergenceReport) -> str:
    """渲染 Markdown（空报告只有表头）"""
    groups = _group_rows(report)
    if not groups:
        return TableFormatter.create_table_header(["k", "Rate"])
    return "\n".join(_render_group(key, rows) for key, rows in groups.items())


def render_report(report: ConvergenceReport, fmt: str = "markdown") -> str:
    """
    渲染收敛报告

    Args:
        report: 收敛报告
        fmt: "csv" 或 "markdown"（"md"）

    Returns:
        str: 报告文本
    """
    require(fmt in FORMATS, "REPORT_FORMAT_UNKNOWN", fmt=fmt)
    if fmt == "csv":
        return render_csv(report)
    return render_markdown(report)

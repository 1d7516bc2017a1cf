"""报告生成模块"""

from .formatters import NumberFormatter, TableFormatter
from .generator import render_csv, render_markdown, render_report

__all__ = ["NumberFormatter", "TableFormatter", "render_csv", "render_markdown", "render_report"]

"""报告格式化器 - 提供共享的格式化逻辑

包括：
- 误差与速率的数值格式化（科学计数法，5 位有效数字）
- Markdown 表格生成

使用示例:
    from src.report.formatters import NumberFormatter, TableFormatter

    NumberFormatter.format_error(2.1453e-06)   # '2.1453e-06'
    NumberFormatter.format_rate(2.01634)       # '2.0163'
    table = TableFormatter.create_table_header(["k", "N=40", "Rate"])
"""

import math
from typing import Any, List, Optional


# =============================================================================
# 数值格式化器
# =============================================================================

class NumberFormatter:
    """数值格式化器

    误差用 5 位有效数字的科学计数法；速率保留 4 位小数。失败或无定义的值显示为占位符。
    """

    ERROR_FORMAT = "%.4e"
    MISSING = "—"

    @staticmethod
    def format_error(value: Optional[float]) -> str:
        """
        格式化误差

        示例:
            >>> NumberFormatter.format_error(2.1453e-06)
            '2.1453e-06'
        """
        if value is None or math.isnan(value):
            return NumberFormatter.MISSING
        return NumberFormatter.ERROR_FORMAT % value

    @staticmethod
    def format_rate(value: Optional[float]) -> str:
        """
        格式化收敛速率

        示例:
            >>> NumberFormatter.format_rate(2.01634)
            '2.0163'
        """
        if value is None or math.isnan(value):
            return NumberFormatter.MISSING
        return f"{value:.4f}"

    @staticmethod
    def format_parameters(alpha: float, gamma: float) -> str:
        """(α, γ) 标签"""
        return f"(α, γ) = ({alpha:g}, {gamma:g})"


# =============================================================================
# 表格格式化器
# =============================================================================

class TableFormatter:
    """表格格式化器 - Markdown表格生成"""

    @staticmethod
    def create_table_header(headers: List[str]) -> str:
        """
        创建Markdown表格头部

        Args:
            headers: 列标题列表

        Returns:
            Markdown表格头部字符串

        示例:
            >>> TableFormatter.create_table_header(["k", "Rate"])
            '| k | Rate |\\n|---------|---------|\\n'
        """
        separator = "|" + "|".join(["---------"] * len(headers)) + "|"
        header = "| " + " | ".join(headers) + " |\n"
        header += separator + "\n"
        return header

    @staticmethod
    def create_table_row(cells: List[Any]) -> str:
        """
        创建Markdown表格行

        Args:
            cells: 单元格内容列表

        Returns:
            Markdown表格行字符串

        示例:
            >>> TableFormatter.create_table_row([2, "2.1453e-06"])
            '| 2 | 2.1453e-06 |\\n'
        """
        return "| " + " | ".join(str(cell) for cell in cells) + " |\n"

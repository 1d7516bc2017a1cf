"""收敛报告 JSON 保存器

保存报告行、配置回显与运行环境信息，便于事后比对。
"""

import json
import platform
from datetime import datetime
from pathlib import Path
from typing import Any, Dict, Union

import numpy as np
import scipy


class ReportJSONSaver:
    """收敛报告 JSON 保存器"""

    @staticmethod
    def environment() -> Dict[str, Any]:
        """运行环境信息"""
        return {
            "timestamp": datetime.now().isoformat(timespec="seconds"),
            "python": platform.python_version(),
            "platform": platform.platform(),
            "numpy": np.__version__,
            "scipy": scipy.__version__,
        }

    def build_json(self, report) -> Dict[str, Any]:
        """
        构建 JSON 数据结构

        Args:
            report: ConvergenceReport

        Returns:
            Dict: {"metadata", "environment", "rows"}
        """
        data = report.to_dict()
        data["environment"] = self.environment()
        data["summary"] = {
            "row_count": len(report.rows),
            "failed_count": len(report.failed),
        }
        return data

    def save_report(self, report, path: Union[str, Path]) -> str:
        """
        保存报告到 JSON

        Args:
            report: ConvergenceReport
            path: 文件路径，父目录不存在时自动创建

        Returns:
            str: JSON 文件路径
        """
        filepath = Path(path)
        filepath.parent.mkdir(parents=True, exist_ok=True)

        with open(filepath, 'w', encoding='utf-8') as f:
            json.dump(self.build_json(report), f, ensure_ascii=False, indent=2)

        return str(filepath)


def save_report_json(report, path: Union[str, Path]) -> str:
    """
    保存收敛报告（行 + 配置回显 + 环境信息）

    Args:
        report: ConvergenceReport
        path: 文件路径

    Returns:
        str: JSON 文件路径
    """
    return ReportJSONSaver().save_report(report, path)

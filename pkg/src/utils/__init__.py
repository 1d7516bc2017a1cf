"""工具模块"""

from .json_saver import ReportJSONSaver, save_report_json

__all__ = ["ReportJSONSaver", "save_report_json"]

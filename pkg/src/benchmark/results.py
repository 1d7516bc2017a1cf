"""收敛实验结果数据模型"""

import math
from dataclasses import dataclass, field
from typing import Any, Dict, Iterable, List, Optional

import numpy as np
import pandas as pd


@dataclass
class CellResult:
    """单次运行 (k, N) 的结果"""

    k: int  # BDF 阶数
    N: int  # 步数
    final: Optional[np.ndarray] = None  # G^N(T)
    elapsed_s: float = 0.0  # 运行耗时（秒）
    success: bool = True  # 是否成功
    error_message: Optional[str] = None  # 失败原因

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典（不含解向量）"""
        return {
            "k": self.k,
            "N": self.N,
            "elapsed_s": self.elapsed_s,
            "success": self.success,
            "error_message": self.error_message,
        }


@dataclass
class ConvergenceRow:
    """收敛表的一行：阶数 k、步数 N 的误差与速率"""

    example: str
    scheme: str
    alpha: float
    gamma: float
    k: int
    N: int
    error: float  # e_N
    rate: float  # log2(e_{N/2}/e_N)，首行为 NaN
    status: str = "ok"  # ok / failed
    message: str = ""  # 失败诊断

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典（NaN 转为 None，便于 JSON）"""
        def clean(value: float) -> Optional[float]:
            return None if value is None or math.isnan(value) else float(value)

        return {
            "example": self.example,
            "scheme": self.scheme,
            "alpha": self.alpha,
            "gamma": self.gamma,
            "k": self.k,
            "N": self.N,
            "error": clean(self.error),
            "rate": clean(self.rate),
            "status": self.status,
            "message": self.message,
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ConvergenceRow":
        """从字典创建"""
        values = dict(data)
        for key in ("error", "rate"):
            if values.get(key) is None:
                values[key] = math.nan
        return cls(**values)


@dataclass
class ConvergenceReport:
    """收敛报告：按 (k, N) 排列的行与配置回显"""

    rows: List[ConvergenceRow] = field(default_factory=list)
    metadata: Dict[str, Any] = field(default_factory=dict)

    @property
    def failed(self) -> List[ConvergenceRow]:
        """失败的行"""
        return [row for row in self.rows if row.status != "ok"]

    @property
    def has_failures(self) -> bool:
        return bool(self.failed)

    def row(self, k: int, N: int, alpha: Optional[float] = None) -> ConvergenceRow:
        """按 (k, N) 查找行；多参数组合并的报告需给出 alpha"""
        for row in self.rows:
            if row.k == k and row.N == N and (alpha is None or row.alpha == alpha):
                return row
        raise KeyError((k, N, alpha))

    def rows_for(self, k: int, alpha: Optional[float] = None) -> List[ConvergenceRow]:
        """某个阶数的全部行（按 N 升序）"""
        rows = [r for r in self.rows if r.k == k and (alpha is None or r.alpha == alpha)]
        return sorted(rows, key=lambda r: r.N)

    def to_frame(self) -> pd.DataFrame:
        """转换为 DataFrame"""
        columns = ["example", "scheme", "alpha", "gamma", "k", "N", "error", "rate", "status", "message"]
        return pd.DataFrame([vars(row) for row in self.rows], columns=columns)

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        return {
            "metadata": self.metadata,
            "rows": [row.to_dict() for row in self.rows],
        }

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "ConvergenceReport":
        """从字典创建"""
        return cls(rows=[ConvergenceRow.from_dict(r) for r in data.get("rows", [])],
                   metadata=dict(data.get("metadata", {})))

    @classmethod
    def combine(cls, reports: Iterable["ConvergenceReport"], **metadata: Any) -> "ConvergenceReport":
        """
        合并多个报告（研究用例展开为多组配置时使用）

        Args:
            reports: 报告列表
            **metadata: 合并后附加的元数据

        Returns:
            ConvergenceReport: 合并后的报告，元数据中 runs 保存各报告的元数据
        """
        reports = list(reports)
        rows = [row for report in reports for row in report.rows]
        merged = dict(metadata)
        merged["runs"] = [report.metadata for report in reports]
        return cls(rows=rows, metadata=merged)

"""研究用例基类和数据结构"""

from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional, Tuple

from ..benchmark.experiment_config import ExperimentConfig


@dataclass
class StudyCase:
    """研究用例：一个算例与格式在若干 (α, γ) 组合上的收敛实验"""

    name: str  # 用例唯一标识符
    category: str  # 类别: "corrected" / "standard" / "oracle"
    example: str  # 算例 a / b / c / mode
    scheme: str  # standard / corrected
    description: str = ""  # 说明
    parameter_pairs: List[Tuple[float, float]] = field(default_factory=lambda: [(1.7, 0.3), (1.3, 0.7)])
    sigma: float = 0.5
    T: float = 1.0
    k_list: List[int] = field(default_factory=lambda: [2, 3, 4, 5, 6])
    N_list: List[int] = field(default_factory=lambda: [40, 80, 160, 320])
    M: int = 60
    backend: str = "chebyshev"
    reference: str = "self"
    metadata: Dict[str, Any] = field(default_factory=dict)  # 元数据

    def expand(self, **overrides: Any) -> List[ExperimentConfig]:
        """
        展开为每个 (α, γ) 一组的实验配置

        Args:
            **overrides: 覆盖字段（如 M、workers、output），值为 None 时忽略

        Returns:
            List[ExperimentConfig]: 实验配置列表
        """
        base = {
            "example": self.example,
            "scheme": self.scheme,
            "sigma": self.sigma,
            "T": self.T,
            "k_list": list(self.k_list),
            "N_list": list(self.N_list),
            "M": self.M,
            "backend": self.backend,
            "reference": self.reference,
        }
        base.update({key: value for key, value in overrides.items() if value is not None})
        return [ExperimentConfig.from_values(**base, alpha=alpha, gamma=gamma)
                for alpha, gamma in self.parameter_pairs]

    def to_dict(self) -> Dict[str, Any]:
        """转换为字典"""
        return {
            "name": self.name,
            "category": self.category,
            "example": self.example,
            "scheme": self.scheme,
            "description": self.description,
            "parameter_pairs": [list(pair) for pair in self.parameter_pairs],
            "sigma": self.sigma,
            "T": self.T,
            "k_list": self.k_list,
            "N_list": self.N_list,
            "M": self.M,
            "backend": self.backend,
            "reference": self.reference,
            "metadata": self.metadata,
        }


class BaseStudyCategory:
    """研究用例类别基类"""

    def __init__(self, category_name: str):
        """
        初始化用例类别

        Args:
            category_name: 类别名称
        """
        self.category_name = category_name
        self.cases: List[StudyCase] = []

    def get_cases(self) -> List[StudyCase]:
        return self.cases

    def add_case(self, case: StudyCase):
        """
        添加用例

        Args:
            case: 研究用例
        """
        case.category = self.category_name
        self.cases.append(case)

    def create_case(
        self,
        name: str,
        example: str,
        scheme: str,
        description: str = "",
        parameter_pairs: Optional[List[Tuple[float, float]]] = None,
        **kwargs: Any
    ) -> StudyCase:
        """
        创建并添加用例

        Args:
            name: 用例名称
            example: 算例
            scheme: 格式
            description: 说明
            parameter_pairs: (α, γ) 组合，缺省为 (1.7, 0.3) 与 (1.3, 0.7)
            **kwargs: StudyCase 的其余字段

        Returns:
            StudyCase: 创建的用例
        """
        case = StudyCase(name=name, category=self.category_name, example=example,
                         scheme=scheme, description=description, **kwargs)
        if parameter_pairs is not None:
            case.parameter_pairs = list(parameter_pairs)
        self.add_case(case)
        return case

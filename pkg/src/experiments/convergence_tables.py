"""收敛表研究用例

σ = 0.5, T = 1, (α, γ) ∈ {(1.7, 0.3), (1.3, 0.7)}, k = 2..6, N = 40..320。
"""

from .base_case import BaseStudyCategory
from .registry import StudyRegistry, registry


class CorrectedSchemeCases(BaseStudyCategory):
    """修正 BDFk：非光滑初值与源项下恢复 k 阶"""

    def __init__(self):
        super().__init__("corrected")
        self.create_case(
            name="corrected_a",
            example="a",
            scheme="corrected",
            description="修正格式, g0 = √(1-x²), f = 0",
        )
        self.create_case(
            name="corrected_b",
            example="b",
            scheme="corrected",
            description="修正格式, g0 = 0, f = (t+1)^5 (1 + χ)",
        )
        self.create_case(
            name="corrected_c",
            example="c",
            scheme="corrected",
            description="修正格式, g0 = √(1-x²), f = cos(t) (1 + χ)",
        )


class StandardSchemeCases(BaseStudyCategory):
    """标准 BDFk：非光滑数据下退化为一阶"""

    def __init__(self):
        super().__init__("standard")
        self.create_case(
            name="standard_a",
            example="a",
            scheme="standard",
            description="标准格式, g0 = √(1-x²), f = 0",
        )
        self.create_case(
            name="standard_c",
            example="c",
            scheme="standard",
            description="标准格式, g0 = √(1-x²), f = cos(t) (1 + χ)",
        )


class EigenmodeCases(BaseStudyCategory):
    """正弦后端特征模态问题，与 Mittag-Leffler 精确解比较"""

    def __init__(self):
        super().__init__("oracle")
        self.create_case(
            name="eigenmode_exact",
            example="mode",
            scheme="corrected",
            description="修正格式, g0 = φ_1, f = 0, 精确参考解",
            parameter_pairs=[(1.3, 0.3), (1.3, 0.7), (1.7, 0.3), (1.7, 0.7)],
            k_list=[1, 2, 3, 4],
            M=16,
            backend="sine",
            reference="exact",
        )


def register_convergence_cases(target: StudyRegistry = registry) -> StudyRegistry:
    """
    注册全部收敛表用例

    Args:
        target: 目标注册表

    Returns:
        StudyRegistry: 注册后的注册表
    """
    target.register(CorrectedSchemeCases())
    target.register(StandardSchemeCases())
    target.register(EigenmodeCases())
    return target


register_convergence_cases()

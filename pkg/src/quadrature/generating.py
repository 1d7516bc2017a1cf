"""BDFk 生成多项式

δ(ξ) = Σ_{j=1}^k (1/j)(1-ξ)^j，按 ξ 的幂展开后以精确有理数保存，只在构造时转换一次浮点。
"""

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import comb
from typing import Tuple

import numpy as np

from ..utils.exceptions import require

MIN_ORDER = 1
MAX_ORDER = 6


def check_order(k: int, low: int = MIN_ORDER, high: int = MAX_ORDER) -> None:
    """检查 BDF 阶数是否位于 [low, high]"""
    require(isinstance(k, (int, np.integer)) and low <= k <= high,
            "ORDER_OUT_OF_RANGE", k=k, low=low, high=high)


@dataclass(frozen=True)
class GeneratingPoly:
    """BDFk 生成多项式 δ(ξ) 的系数 c_0..c_k"""

    order: int
    exact_coeffs: Tuple[Fraction, ...]

    @property
    def coeffs(self) -> np.ndarray:
        """浮点系数 c_0..c_k（ξ^0..ξ^k）"""
        return np.array([float(c) for c in self.exact_coeffs])

    def __call__(self, xi):
        """在 ξ 处求值（支持复数与数组）"""
        xi = np.asarray(xi)
        one_minus = 1.0 - xi
        # (1-ξ) 形式在 ξ→1 附近没有抵消误差
        total = np.zeros_like(one_minus, dtype=np.result_type(one_minus, float))
        for j in range(self.order, 0, -1):
            total = (total + 1.0 / j) * one_minus
        return total

    def derivative_at_one(self) -> Fraction:
        """δ'(1) = Σ i c_i，BDFk 相容性要求其为 -1"""
        return sum((i * c for i, c in enumerate(self.exact_coeffs)), Fraction(0))

    def value_at_one(self) -> Fraction:
        """δ(1) = Σ c_i，应为 0"""
        return sum(self.exact_coeffs, Fraction(0))


@lru_cache(maxsize=None)
def bdf_generating_poly(k: int) -> GeneratingPoly:
    """
    构造 BDFk 生成多项式

    Args:
        k: BDF 阶数，1 <= k <= 6

    Returns:
        GeneratingPoly: δ(ξ) 在 ξ 幂次下的系数

    示例:
        >>> bdf_generating_poly(2).coeffs
        array([ 1.5, -2. ,  0.5])
    """
    check_order(k)
    coeffs = []
    for i in range(k + 1):
        # (1-ξ)^j 中 ξ^i 的系数为 (-1)^i C(j, i)
        c_i = sum((Fraction((-1) ** i * comb(j, i), j) for j in range(max(i, 1), k + 1)), Fraction(0))
        coeffs.append(c_i)
    return GeneratingPoly(order=int(k), exact_coeffs=tuple(coeffs))

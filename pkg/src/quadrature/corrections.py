"""起始步修正系数

修正 BDFk 在前 k-1 步加入的源项系数 a_n^(k)、b_n^(k) 与 d_{l,n}^(k)。
表中的值均为精确分数，只转换一次浮点。k=1 不需要修正，返回空表。
"""

from dataclasses import dataclass
from fractions import Fraction as F
from functools import lru_cache
from typing import Dict, List, Tuple

from .generating import check_order

# a_n^(k), n = 1..k-1
_A_COEFFS: Dict[int, List[F]] = {
    1: [],
    2: [F(1, 2)],
    3: [F(11, 12), F(-5, 12)],
    4: [F(31, 24), F(-7, 6), F(3, 8)],
    5: [F(1181, 720), F(-177, 80), F(341, 240), F(-251, 720)],
    6: [F(2837, 1440), F(-2543, 720), F(17, 5), F(-1201, 720), F(95, 288)],
}

# b_n^(k)；与 a 行逐项相等，单独保存以便断言这一点而不是假定它
_B_COEFFS: Dict[int, List[F]] = {
    1: [],
    2: [F(1, 2)],
    3: [F(11, 12), F(-5, 12)],
    4: [F(31, 24), F(-7, 6), F(3, 8)],
    5: [F(1181, 720), F(-177, 80), F(341, 240), F(-251, 720)],
    6: [F(2837, 1440), F(-2543, 720), F(17, 5), F(-1201, 720), F(95, 288)],
}

# d_{l,n}^(k), l = 1..k-2（行）, n = 1..k-1（列）
_D_COEFFS: Dict[int, List[List[F]]] = {
    1: [],
    2: [],
    3: [[F(1, 12), F(0)]],
    4: [[F(1, 6), F(-1, 12), F(0)],
        [F(0), F(0), F(0)]],
    5: [[F(59, 240), F(-29, 120), F(19, 240), F(0)],
        [F(1, 240), F(-1, 240), F(0), F(0)],
        [F(-1, 720), F(0), F(0), F(0)]],
    6: [[F(77, 240), F(-7, 15), F(73, 240), F(-3, 40), F(0)],
        [F(1, 96), F(-1, 60), F(1, 160), F(0), F(0)],
        [F(-1, 360), F(1, 720), F(0), F(0), F(0)],
        [F(0), F(0), F(0), F(0), F(0)]],
}


@dataclass(frozen=True)
class CorrectionTable:
    """阶数 k 的起始步修正系数"""

    k: int
    a: Tuple[float, ...]
    b: Tuple[float, ...]
    d: Tuple[Tuple[float, ...], ...]

    @property
    def steps(self) -> int:
        """需要修正的步数 k-1"""
        return len(self.a)

    def a_n(self, n: int) -> float:
        return self.a[n - 1]

    def b_n(self, n: int) -> float:
        return self.b[n - 1]

    def d_ln(self, l: int, n: int) -> float:
        """d_{l,n}^(k)，l 与 n 均从 1 开始"""
        return self.d[l - 1][n - 1]


@lru_cache(maxsize=None)
def correction_table(k: int) -> CorrectionTable:
    """
    获取阶数 k 的修正系数表

    Args:
        k: BDF 阶数，1 <= k <= 6（k=1 返回空表）

    Returns:
        CorrectionTable: 浮点化的修正系数

    示例:
        >>> correction_table(2).a
        (0.5,)
    """
    check_order(k)
    return CorrectionTable(
        k=int(k),
        a=tuple(float(x) for x in _A_COEFFS[k]),
        b=tuple(float(x) for x in _B_COEFFS[k]),
        d=tuple(tuple(float(x) for x in row) for row in _D_COEFFS[k]),
    )


def exact_correction_rows(k: int) -> Tuple[Tuple[F, ...], Tuple[F, ...], Tuple[Tuple[F, ...], ...]]:
    """返回精确分数形式的 (a, b, d) 行，供校验使用"""
    check_order(k)
    return (tuple(_A_COEFFS[k]), tuple(_B_COEFFS[k]),
            tuple(tuple(row) for row in _D_COEFFS[k]))

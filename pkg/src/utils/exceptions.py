"""异常层次结构

所有对外抛出的异常都继承自 FKACError，命令行入口据此映射退出码：
    - ParameterError  -> 1（参数/前置条件错误）
    - NumericalError  -> 2（数值失败）
"""

from typing import Any

from .error_messages import ErrorMessages


class FKACError(Exception):
    """求解器异常基类"""

    message_key: str = ""

    def __init__(self, message: str = "", **context: Any):
        if not message and self.message_key:
            message = ErrorMessages.get(self.message_key, **context)
        super().__init__(message)
        self.context = context


class ParameterError(FKACError, ValueError):
    """参数不满足前置条件"""


class ConfigError(ParameterError):
    """配置文件缺失或格式错误"""


class NumericalError(FKACError, ArithmeticError):
    """数值计算失败"""


class SpectralDecompositionError(NumericalError):
    """特征分解不满足分数幂的要求（复特征值、非正实部、特征向量奇异）"""


class SolverBlowUpError(NumericalError):
    """时间推进出现非有限值或超过爆破阈值"""

    message_key = "SOLUTION_BLOW_UP"


class QuadratureConvergenceError(NumericalError):
    """参考解积分未收敛"""

    message_key = "QUADRATURE_NOT_CONVERGED"


def require(condition: bool, key: str, /, **context: Any) -> None:
    """
    检查前置条件，不满足时抛出 ParameterError

    Args:
        condition: 需要成立的条件
        key: ErrorMessages 中的消息键
        **context: 格式化参数
    """
    if not condition:
        raise ParameterError(ErrorMessages.get(key, **context), **context)

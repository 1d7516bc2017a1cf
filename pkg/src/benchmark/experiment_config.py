"""收敛实验配置模型"""

from typing import Any, Dict, List, Literal

from pydantic import BaseModel, ConfigDict, ValidationError, field_validator, model_validator

from ..quadrature.generating import MAX_ORDER, MIN_ORDER
from ..utils.error_messages import ErrorMessages
from ..utils.exceptions import ConfigError

EXAMPLES = ("a", "b", "c", "mode")
SCHEMES = ("standard", "corrected")


class ExperimentConfig(BaseModel):
    """
    一次收敛实验的参数网格（不含随机性，完全确定）

    N_list 升序且每项为前一项的两倍，速率公式 log2(e_{N/2}/e_N) 依赖这一点。
    """

    model_config = ConfigDict(frozen=True, extra="forbid")

    example: Literal["a", "b", "c", "mode"] = "a"
    scheme: Literal["standard", "corrected"] = "corrected"
    alpha: float = 1.7
    gamma: float = 0.3
    sigma: float = 0.5
    T: float = 1.0
    k_list: List[int] = [2, 3, 4, 5, 6]
    N_list: List[int] = [40, 80, 160, 320]
    M: int = 60
    output: Literal["csv", "markdown"] = "markdown"
    backend: Literal["chebyshev", "sine"] = "chebyshev"
    reference: Literal["self", "exact"] = "self"
    workers: int = 1

    @field_validator("alpha")
    @classmethod
    def _check_alpha(cls, v: float) -> float:
        if not 1.0 < v <= 2.0:
            raise ValueError(ErrorMessages.get("SPACE_ORDER_INVALID", alpha=v))
        return v

    @field_validator("gamma")
    @classmethod
    def _check_gamma(cls, v: float) -> float:
        if not 0.0 < v < 1.0:
            raise ValueError(ErrorMessages.get("FRACTIONAL_ORDER_INVALID", gamma=v))
        return v

    @field_validator("sigma")
    @classmethod
    def _check_sigma(cls, v: float) -> float:
        if v < 0.0:
            raise ValueError(ErrorMessages.get("TEMPERING_INVALID", sigma=v))
        return v

    @field_validator("T")
    @classmethod
    def _check_T(cls, v: float) -> float:
        if v <= 0.0:
            raise ValueError(ErrorMessages.get("FINAL_TIME_INVALID", T=v))
        return v

    @field_validator("M")
    @classmethod
    def _check_M(cls, v: int) -> int:
        if v < 4:
            raise ValueError(ErrorMessages.get("GRID_TOO_SMALL", M=v, minimum=4))
        return v

    @field_validator("workers")
    @classmethod
    def _check_workers(cls, v: int) -> int:
        if v < 1:
            raise ValueError(ErrorMessages.get("CONFIG_INVALID_VALUE", name="workers", value=v))
        return v

    @field_validator("k_list")
    @classmethod
    def _check_orders(cls, v: List[int]) -> List[int]:
        if not v:
            raise ValueError(ErrorMessages.get("CONFIG_INVALID_VALUE", name="k_list", value=v))
        for k in v:
            if not MIN_ORDER <= k <= MAX_ORDER:
                raise ValueError(ErrorMessages.get("ORDER_OUT_OF_RANGE", k=k, low=MIN_ORDER, high=MAX_ORDER))
        return v

    @field_validator("N_list")
    @classmethod
    def _check_steps(cls, v: List[int]) -> List[int]:
        if not v or v[0] < 1:
            raise ValueError(ErrorMessages.get("CONFIG_INVALID_VALUE", name="N_list", value=v))
        for previous, current in zip(v[:-1], v[1:]):
            if current != 2 * previous:
                raise ValueError(ErrorMessages.get("CONFIG_INVALID_VALUE", name="N_list", value=v))
        return v

    @model_validator(mode="after")
    def _check_grid(self) -> "ExperimentConfig":
        if self.N_list[0] < max(self.k_list):
            raise ValueError(ErrorMessages.get("STEP_COUNT_INVALID", N=self.N_list[0], k=max(self.k_list)))
        if self.backend == "sine" and self.example != "mode":
            raise ValueError(ErrorMessages.get("CONFIG_INVALID_VALUE", name="backend", value=self.backend))
        if self.reference == "exact" and self.example != "mode":
            raise ValueError(ErrorMessages.get("CONFIG_INVALID_VALUE", name="reference", value=self.reference))
        return self

    @classmethod
    def from_values(cls, **values: Any) -> "ExperimentConfig":
        """
        构造配置，校验失败时转换为 ConfigError

        Args:
            **values: 字段值（None 表示使用默认值）

        Returns:
            ExperimentConfig: 配置
        """
        values = {key: value for key, value in values.items() if value is not None}
        try:
            return cls(**values)
        except ValidationError as exc:
            details = "; ".join(str(err.get("msg", "")) for err in exc.errors())
            raise ConfigError(details) from exc

    @property
    def step_counts(self) -> List[int]:
        """实际需要运行的步数：N_list 以及最后一项的两倍（自比较时）"""
        if self.reference == "self":
            return list(self.N_list) + [2 * self.N_list[-1]]
        return list(self.N_list)

    def echo(self) -> Dict[str, Any]:
        """配置回显，写入报告元数据"""
        return self.model_dump()

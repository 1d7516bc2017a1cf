"""研究用例注册表基类"""

from abc import ABC, abstractmethod
from typing import Dict, List

from .base_case import StudyCase
from ..utils.exceptions import require


class BaseStudyRegistry(ABC):
    """研究用例注册表抽象基类，提供通用功能"""

    def __init__(self):
        """初始化注册表"""
        self._cases: Dict[str, StudyCase] = {}

    @abstractmethod
    def register(self, item):
        """
        注册用例或类别（子类实现）

        Args:
            item: 用例或类别对象
        """

    @abstractmethod
    def get_all_cases(self) -> List[StudyCase]:
        """
        获取所有用例（子类实现）

        Returns:
            List[StudyCase]: 所有用例列表
        """

    def get_case(self, name: str) -> StudyCase:
        """
        按名称获取用例

        Args:
            name: 用例名称

        Returns:
            StudyCase: 用例对象

        Raises:
            ParameterError: 用例未注册
        """
        require(name in self._cases, "CASE_UNKNOWN", name=name)
        return self._cases[name]

    def count_cases(self) -> int:
        """统计总用例数量"""
        return len(self._cases)

    def _register_case(self, case: StudyCase):
        """
        内部方法：注册用例到字典

        Args:
            case: 用例对象
        """
        self._cases[case.name] = case

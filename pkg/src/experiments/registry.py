"""研究用例注册表"""

from typing import Dict, List, Optional

from .base_case import BaseStudyCategory, StudyCase
from .base_registry import BaseStudyRegistry


class StudyRegistry(BaseStudyRegistry):
    """按类别组织的研究用例注册表"""

    def __init__(self):
        """初始化注册表"""
        super().__init__()
        self.categories: Dict[str, BaseStudyCategory] = {}

    def register(self, category: BaseStudyCategory):
        """
        注册用例类别（实现基类抽象方法）

        Args:
            category: 用例类别
        """
        self.categories[category.category_name] = category
        for case in category.get_cases():
            self._register_case(case)

    def get_category(self, category_name: str) -> Optional[BaseStudyCategory]:
        return self.categories.get(category_name)

    def get_all_cases(self) -> List[StudyCase]:
        """
        获取所有用例（实现基类抽象方法）

        Returns:
            List[StudyCase]: 按注册顺序排列的用例
        """
        return list(self._cases.values())

    def get_cases_by_category(self, category_name: str) -> List[StudyCase]:
        category = self.get_category(category_name)
        return category.get_cases() if category else []

    def get_categories(self) -> List[str]:
        return list(self.categories.keys())


# 全局注册表实例
registry = StudyRegistry()

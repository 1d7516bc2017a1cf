"""研究用例模块"""

from .base_case import BaseStudyCategory, StudyCase
from .registry import StudyRegistry, registry
from .convergence_tables import register_convergence_cases

__all__ = [
    "BaseStudyCategory",
    "StudyCase",
    "StudyRegistry",
    "registry",
    "register_convergence_cases",
]

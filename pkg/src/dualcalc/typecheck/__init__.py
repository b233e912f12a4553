"""
类型检查：上下文、判断、推导树、检查器与注解回填

主体归约检查在 typecheck.subject 中，它依赖归约引擎，因此不在这里导入。
"""

from .checker import TypeChecker, check, is_typable
from .context import Context, Judgment, judgment
from .derivation import PRIMED_RULES, Derivation, RuleName
from .elaborate import elaborate, elaborate_judgment

__all__ = [
    "Context",
    "Derivation",
    "Judgment",
    "PRIMED_RULES",
    "RuleName",
    "TypeChecker",
    "check",
    "elaborate",
    "elaborate_judgment",
    "is_typable",
    "judgment",
]

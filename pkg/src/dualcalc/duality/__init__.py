"""对偶变换"""

from .involution import (
    RULE_DUALS,
    dual_context,
    dual_derivation,
    dual_expr,
    dual_judgment,
    dual_path,
    dual_rule,
    dual_type,
)

__all__ = [
    "RULE_DUALS",
    "dual_context",
    "dual_derivation",
    "dual_expr",
    "dual_judgment",
    "dual_path",
    "dual_rule",
    "dual_type",
]

"""类型关于类型变量的度量 ‖C‖_X"""

from __future__ import annotations

from ..syntax.types import And, Not, Or, Quantified, TypeExpr, TyVar, free_type_vars


def measure(c: TypeExpr, x: str) -> int:
    """
    ‖C‖_X：X 不在 C 中自由出现时为 0；否则

    ‖X‖ = 1，‖A∧B‖ = ‖A∨B‖ = ‖A‖ + ‖B‖ + 1，‖¬A‖ = ‖A‖ + 1，‖μY.A‖_X = ‖A‖_X + ‖A‖_Y + 1
    """
    if x not in free_type_vars(c):
        return 0
    match c:
        case TyVar():
            return 1
        case And(left, right) | Or(left, right):
            return measure(left, x) + measure(right, x) + 1
        case Not(body):
            return measure(body, x) + 1
        case Quantified(binder=binder, body=body):
            return measure(body, x) + measure(body, binder) + 1
    raise TypeError(f"未知类型: {c!r}")

"""
表达式的度量：大小 |D|、权重 ‖D‖、度 deg(D) = (‖D‖, |D|)、秩 r(D)

度按字典序比较（Python 元组的自然顺序）。秩统计值调用 ς 可约式的嵌套，名调用版本取对偶。
"""

from __future__ import annotations

from ..duality.involution import dual_expr
from ..mono.measure import measure
from ..syntax.terms import (
    BindCo,
    BindVar,
    Case,
    Coitr,
    Covar,
    Cut,
    Expr,
    In,
    Inl,
    Inr,
    Itr,
    Out,
    Pair,
    Var,
)
from ..syntax.traversal import children
from ..syntax.types import Quantified, TypeExpr
from .rules import Mode
from .values import is_value


def size(e: Expr) -> int:
    """|D|：变量与余变量为 0，其余每个构造子加 1"""
    total = 0
    stack = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, (Var, Covar)):
            continue
        total += 1
        stack.extend(children(node))
    return total


def _fixpoint_weight(ann: TypeExpr) -> int:
    if isinstance(ann, Quantified):
        return measure(ann.body, ann.binder)
    return 0


def weight(e: Expr) -> int:
    """‖D‖：in/out 处加上展开类型的度量 ‖A‖_X + 1，其余构造子取子表达式的最大值"""
    parts = [weight(c) for c in children(e)]
    inner = max(parts, default=0)
    if isinstance(e, (In, Out)):
        return inner + _fixpoint_weight(e.ann) + 1
    return inner


def degree(e: Expr) -> tuple[int, int]:
    return (weight(e), size(e))


def _rank_value(e: Expr) -> int:
    match e:
        case Var() | Covar():
            return 0
        case Pair(left, right):
            extra = int(not is_value(left)) + int(not is_value(right))
            return _rank_value(left) + _rank_value(right) + extra
        case Inl(body) | Inr(body) | In(_, body):
            return _rank_value(body) + int(not is_value(body))
        case Coitr(step=step, seed=seed):
            return _rank_value(step) + _rank_value(seed) + int(not is_value(seed))
        case Case(left, right):
            return _rank_value(left) + _rank_value(right)
        case Itr(step=step, cont=cont):
            return _rank_value(step) + _rank_value(cont)
        case Cut(term, coterm):
            return _rank_value(term) + _rank_value(coterm)
        case BindCo() | BindVar():
            return _rank_value(e.body)
    return sum(_rank_value(c) for c in children(e))


def rank(e: Expr, mode: Mode = Mode.VALUE) -> int:
    """
    r(D)

    Args:
        e: 表达式
        mode: VALUE 为值调用的秩；NAME 为名调用的秩，即 r(D°)
    """
    if mode is Mode.NAME:
        return _rank_value(dual_expr(e))
    return _rank_value(e)

"""把检查器求得的切割类型与特征变量写回表达式"""

from __future__ import annotations

from ..syntax.terms import Cut, Expr, TyAbs, TyUnpack
from ..syntax.traversal import rebuild
from .checker import check
from .context import Judgment
from .derivation import PRIMED_RULES, Derivation


def elaborate(derivation: Derivation) -> Expr:
    """
    按推导树重建主表达式：每个切割带上切割类型，⟨M⟩a / e[K] 带上特征变量

    带撇规则不改变主表达式，直接跳过。
    """
    node = derivation
    while node.rule in PRIMED_RULES:
        node = node.premises[0]
    e = node.conclusion.principal
    subs = [elaborate(p) for p in node.premises]
    match e:
        case Cut():
            return Cut(subs[0], subs[1], ann=node.premises[0].conclusion.type)
        case TyAbs():
            return TyAbs(subs[0], eigen=node.eigenvariable)
        case TyUnpack():
            return TyUnpack(subs[0], eigen=node.eigenvariable)
    if not subs:
        return e
    return rebuild(e, subs)


def elaborate_judgment(judgment: Judgment) -> Judgment:
    """用推断模式检查后回填注解，结果可以在默认的双向模式下通过检查"""
    return judgment.with_principal(elaborate(check(judgment, infer=True)))

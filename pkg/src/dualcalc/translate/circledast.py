"""
值调用 DCμν 到弱值调用 DCμν 的变换 (−)⊛

非值的子项被提前到切割里求值，使 ς 规则不再需要：D →*CBV D⊛，
并且 CBV 的一步归约对应 wCBV 的若干步归约。变换保持类型与“是否为值”。
"""

from __future__ import annotations

from typing import Callable, Optional

from ..errors import TranslationError
from ..reduction.values import is_value
from ..syntax.names import NameSupply
from ..syntax.terms import (
    DC2_CONSTRUCTORS,
    BindCo,
    BindVar,
    Case,
    Coitr,
    Covar,
    Cut,
    Expr,
    Fst,
    In,
    Inl,
    Inr,
    Itr,
    NotElim,
    NotIntro,
    Out,
    Pair,
    Snd,
    Term,
    Var,
)
from ..syntax.traversal import supply_for


class _Circledast:
    def __init__(self, supply: NameSupply):
        self.supply = supply

    def lift(self, m: Term, build: Callable[[Term], Term]) -> Term:
        """((M)⊛ • x.(build(x) • α)).α"""
        x = self.supply.fresh_var("x")
        alpha = self.supply.fresh_covar("a")
        return BindCo(Cut(self.expr(m), BindVar(x, Cut(build(Var(x)), Covar(alpha)))), alpha)

    def pair(self, e: Pair) -> Term:
        left, right = e.left, e.right
        left_value, right_value = is_value(left), is_value(right)
        if left_value and right_value:
            return Pair(self.expr(left), self.expr(right))
        if left_value:
            return self.lift(right, lambda y: Pair(self.expr(left), y))
        if right_value:
            return self.lift(left, lambda x: Pair(x, self.expr(right)))
        x = self.supply.fresh_var("x")
        y = self.supply.fresh_var("y")
        alpha = self.supply.fresh_covar("a")
        beta = self.supply.fresh_covar("b")
        both = BindCo(
            Cut(self.expr(right), BindVar(y, Cut(Pair(Var(x), Var(y)), Covar(beta)))), beta
        )
        return BindCo(Cut(self.expr(left), BindVar(x, Cut(both, Covar(alpha)))), alpha)

    def expr(self, e: Expr) -> Expr:
        match e:
            case Var() | Covar():
                return e
            case Pair():
                return self.pair(e)
            case Inl(body, ann) | Inr(body, ann):
                cls = type(e)
                if is_value(body):
                    return cls(self.expr(body), ann)
                return self.lift(body, lambda x: cls(x, ann))
            case In(ann, body):
                if is_value(body):
                    return In(ann, self.expr(body))
                return self.lift(body, lambda x: In(ann, x))
            case Coitr(ann, binder, step, seed):
                if is_value(seed):
                    return Coitr(ann, binder, self.expr(step), self.expr(seed))
                return self.lift(seed, lambda y: Coitr(ann, binder, self.expr(step), y))
            case NotIntro(body):
                return NotIntro(self.expr(body))
            case NotElim(body):
                return NotElim(self.expr(body))
            case BindCo(body, binder):
                return BindCo(self.expr(body), binder)
            case BindVar(binder, body):
                return BindVar(binder, self.expr(body))
            case Case(left, right):
                return Case(self.expr(left), self.expr(right))
            case Fst(body, ann):
                return Fst(self.expr(body), ann)
            case Snd(body, ann):
                return Snd(self.expr(body), ann)
            case Out(ann, body):
                return Out(ann, self.expr(body))
            case Itr(ann, binder, step, cont):
                return Itr(ann, binder, self.expr(step), self.expr(cont))
            case Cut(term, coterm, ann):
                return Cut(self.expr(term), self.expr(coterm), ann)
        if isinstance(e, DC2_CONSTRUCTORS):
            raise TranslationError(f"(−)⊛ 只对 DCμν 定义，不接受 {type(e).__name__}")
        raise TypeError(f"未知表达式: {e!r}")


def circledast(e: Expr, *, supply: Optional[NameSupply] = None, seed: int = 0) -> Expr:
    """(D)⊛；新名字取自 supply（默认避开 D 中出现的全部名字）"""
    supply = supply if supply is not None else supply_for(e, seed=seed)
    return _Circledast(supply).expr(e)

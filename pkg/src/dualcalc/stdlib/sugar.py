"""
语法糖：蕴涵、λ、投影与非确定选择

A ⊃ B = ¬A ∨ B
λx.M  = (⟨[x.(⟨M⟩inr • γ)]not⟩inl • γ).γ
N @ K = [not⟨N⟩, K]
λ(x,α).S = λx.((S).α)
⟨M|N⟩ = ((M • α).β • x.(N • α)).α

所有新名字取自名字供给；不传供给时按参数中出现的名字新建一个。
"""

from __future__ import annotations

from typing import Optional

from ..reduction.rules import ReductionRule
from ..syntax.names import Name, NameSupply
from ..syntax.terms import (
    BindCo,
    BindVar,
    Case,
    Coterm,
    Covar,
    Cut,
    Expr,
    Fst,
    Inl,
    Inr,
    NotElim,
    NotIntro,
    Snd,
    Statement,
    Term,
    Var,
)
from ..syntax.traversal import supply_for
from ..syntax.types import TypeExpr, implies

# λx.M • (N@K) 到 M[N/x] • K 的五步归约
IMPLICATION_BETA_RULES = (
    ReductionRule.BETA_R,
    ReductionRule.BETA_OR1,
    ReductionRule.BETA_NOT,
    ReductionRule.BETA_L,
    ReductionRule.BETA_OR2,
)


def _supply(
    supply: Optional[NameSupply], *parts: Expr, reserve: tuple[Name, ...] = ()
) -> NameSupply:
    if supply is None:
        supply = supply_for(*parts)
    supply.reserve(reserve)
    return supply


def lam(
    x: Name,
    body: Term,
    dom: Optional[TypeExpr] = None,
    cod: Optional[TypeExpr] = None,
    *,
    supply: Optional[NameSupply] = None,
) -> Term:
    """λx.M；给出 dom 与 cod 时在 inl/inr 和切割上写入 dom ⊃ cod"""
    supply = _supply(supply, body, reserve=(x,))
    gamma = supply.fresh_covar("c")
    ann = implies(dom, cod) if dom is not None and cod is not None else None
    inner = BindVar(x, Cut(Inr(body, ann=ann), Covar(gamma), ann=ann))
    return BindCo(Cut(Inl(NotIntro(inner), ann=ann), Covar(gamma), ann=ann), gamma)


def at(n: Term, k: Coterm) -> Coterm:
    """N @ K"""
    return Case(NotElim(n), k)


def lam2(
    x: Name,
    alpha: Name,
    s: Statement,
    dom: Optional[TypeExpr] = None,
    cod: Optional[TypeExpr] = None,
    *,
    supply: Optional[NameSupply] = None,
) -> Term:
    """λ(x,α).S"""
    supply = _supply(supply, s, reserve=(x, alpha))
    return lam(x, BindCo(s, alpha), dom, cod, supply=supply)


def apply_to(f: Term, n: Term, k: Coterm) -> Statement:
    """F • (N @ K)"""
    return Cut(f, at(n, k))


def pi1(m: Term, *, supply: Optional[NameSupply] = None) -> Term:
    """π1(M) = (M • fst[α]).α"""
    alpha = _supply(supply, m).fresh_covar("a")
    return BindCo(Cut(m, Fst(Covar(alpha))), alpha)


def pi2(m: Term, *, supply: Optional[NameSupply] = None) -> Term:
    alpha = _supply(supply, m).fresh_covar("a")
    return BindCo(Cut(m, Snd(Covar(alpha))), alpha)


def choice(m: Term, n: Term, *, supply: Optional[NameSupply] = None) -> Term:
    """
    非确定选择 ⟨M|N⟩

    非确定策略下同时有 (βR) 与 (βL) 可约式；值调用只能选 M，名调用只能选 N。
    """
    supply = _supply(supply, m, n)
    alpha = supply.fresh_covar("a")
    beta = supply.fresh_covar("b")
    x = supply.fresh_var("x")
    left = BindCo(Cut(m, Covar(alpha)), beta)
    return BindCo(Cut(left, BindVar(x, Cut(n, Covar(alpha)))), alpha)


def identity(x: Optional[Name] = None, a: Optional[TypeExpr] = None) -> Term:
    """λx.x"""
    x = x or Name("x")
    return lam(x, Var(x), a, a)

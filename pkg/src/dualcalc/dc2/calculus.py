"""
二阶对偶演算 DC2

DC2 复用 DCμν 的表达式与判断，只是换了一组构造子：去掉 μ/ν 及其构造子，加入 ∀/∃ 与 ⟨M⟩a、a[K]、⟨M⟩e、e[K]。
归约只有非确定策略，规则为 DC 的规则加上 (β∀)、(β∃)。
"""

from __future__ import annotations

from dataclasses import replace
from typing import Iterable, Mapping, Optional, Union

from ..config import DEFAULT_LIMITS, Limits
from ..duality.involution import dual_derivation, dual_expr, dual_judgment, dual_type
from ..errors import ForbiddenConstructor
from ..reduction import (
    NONDET_DC2,
    Pick,
    Redex,
    ReductionGraph,
    Trace,
    TraceSet,
    build_graph,
    normalize,
    redexes,
    step,
)
from ..syntax.names import Name, NameSupply
from ..syntax.terms import CONSTRUCTOR_NAMES, FIXPOINT_CONSTRUCTORS, Expr, TyAbs, TyUnpack
from ..syntax.traversal import children, expr_type_names, rebuild, subst_type_in_expr
from ..syntax.types import Mu, Nu, System, TypeExpr, TyVar, free_type_vars, iter_subtypes
from ..typecheck.checker import TypeChecker
from ..typecheck.context import Context, Judgment
from ..typecheck.derivation import Derivation


def _as_dc2(j: Judgment) -> Judgment:
    return j if j.system is System.DC2 else replace(j, system=System.DC2)


def check2(j: Judgment, *, infer: bool = False, primed_quantifiers: bool = False) -> Derivation:
    """
    在 DC2 中检查判断

    Args:
        j: 判断；system 字段会被视为 DC2
        infer: 缺少切割类型时用合一求解
        primed_quantifiers: 启用带撇的量词规则（只用于复现不满足主体归约的反例）
    """
    checker = TypeChecker(infer=infer, primed_quantifiers=primed_quantifiers)
    return checker.check(_as_dc2(j))


def redexes2(e: Expr) -> list[Redex]:
    return redexes(e, NONDET_DC2)


def step2(e: Expr, redex: Redex, *, supply: Optional[NameSupply] = None, seed: int = 0) -> Expr:
    return step(e, redex, NONDET_DC2, supply=supply, seed=seed)


def normalize2(
    e: Expr,
    fuel: Optional[int] = None,
    pick: Pick = Pick.LEFTMOST,
    *,
    limits: Limits = DEFAULT_LIMITS,
    seed: int = 0,
) -> Union[Trace, TraceSet]:
    return normalize(e, NONDET_DC2, fuel, pick, limits=limits, seed=seed)


def graph2(e: Expr, *, limits: Limits = DEFAULT_LIMITS, seed: int = 0) -> ReductionGraph:
    return build_graph(e, NONDET_DC2, limits=limits, seed=seed)


def _reject_fixpoints(e: Expr) -> None:
    stack = [e]
    while stack:
        node = stack.pop()
        if isinstance(node, FIXPOINT_CONSTRUCTORS):
            raise ForbiddenConstructor(System.DC2, CONSTRUCTOR_NAMES[type(node)])
        stack.extend(children(node))


def dual2_type(a: TypeExpr) -> TypeExpr:
    for sub in iter_subtypes(a):
        if isinstance(sub, (Mu, Nu)):
            raise ForbiddenConstructor(System.DC2, "mu" if isinstance(sub, Mu) else "nu")
    return dual_type(a)


def dual2(e: Expr) -> Expr:
    """DC2 表达式的对偶：(⟨M⟩a)° = e[M°]，(a[K])° = ⟨K°⟩e"""
    _reject_fixpoints(e)
    return dual_expr(e)


def dual2_judgment(j: Judgment) -> Judgment:
    _reject_fixpoints(j.principal)
    return dual_judgment(_as_dc2(j))


def dual2_derivation(d: Derivation) -> Derivation:
    return dual_derivation(d)


def freshen_eigenvariables(
    e: Expr, avoid: Iterable[str], supply: Optional[NameSupply] = None
) -> Expr:
    """
    把与 avoid 冲突的特征变量提示换成新名字

    提示 Y 在 ⟨M⟩a{Y} / e{Y}[K] 的体内绑定，换名时同步替换体内注解中的 Y。
    """
    avoid = frozenset(avoid)
    if supply is None:
        supply = NameSupply(avoid)
        supply.reserve(expr_type_names(e))
    return _freshen(e, avoid, supply)


def _freshen(e: Expr, avoid: frozenset[str], supply: NameSupply) -> Expr:
    if isinstance(e, (TyAbs, TyUnpack)) and e.eigen is not None and e.eigen in avoid:
        renamed = supply.fresh_type(e.eigen)
        body = subst_type_in_expr(e.body, TyVar(renamed), e.eigen)
        e = replace(e, body=body, eigen=renamed)
    kids = children(e)
    if not kids:
        return e
    return rebuild(e, [_freshen(k, avoid, supply) for k in kids])


def weaken(
    j: Judgment,
    gamma: Optional[Mapping[Name, TypeExpr]] = None,
    delta: Optional[Mapping[Name, TypeExpr]] = None,
) -> Judgment:
    """
    弱化：向 Γ、Δ 加入声明

    新声明中自由出现的类型变量若与主表达式的特征变量提示同名，先把提示换成新名字，
    保证弱化后的判断仍然可以推导。
    """
    extra_gamma, extra_delta = Context(gamma or {}), Context(delta or {})
    mentioned: set[str] = set()
    for ty in list(extra_gamma.values()) + list(extra_delta.values()):
        mentioned |= free_type_vars(ty)
    principal = freshen_eigenvariables(j.principal, mentioned)
    return Judgment(
        j.gamma.update(extra_gamma),
        j.delta.update(extra_delta),
        principal,
        j.type,
        j.system,
    )

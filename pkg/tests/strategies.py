"""hypothesis 生成器：类型、带类型的判断与小的无类型表达式"""

from __future__ import annotations

from typing import Optional

from hypothesis import strategies as st

from dualcalc.stdlib import NAT, TOP
from dualcalc.stdlib.encodings import NAT_BODY
from dualcalc.syntax import (
    And,
    BindCo,
    BindVar,
    Case,
    Covar,
    Cut,
    Fst,
    In,
    Inl,
    Inr,
    Itr,
    Name,
    NameSupply,
    Not,
    NotElim,
    NotIntro,
    Or,
    Pair,
    Snd,
    TyVar,
    Var,
    covar,
    var,
)
from dualcalc.syntax.terms import Coterm, Expr, Term
from dualcalc.syntax.types import TypeExpr
from dualcalc.typecheck import Judgment, judgment

BASE_TYPES = [TyVar("A"), TyVar("B")]


def dc_types(max_leaves: int = 5) -> st.SearchStrategy[TypeExpr]:
    return st.recursive(
        st.sampled_from(BASE_TYPES),
        lambda inner: st.one_of(
            st.builds(And, inner, inner),
            st.builds(Or, inner, inner),
            st.builds(Not, inner),
        ),
        max_leaves=max_leaves,
    )


def dcmunu_types(max_leaves: int = 4) -> st.SearchStrategy[TypeExpr]:
    return st.recursive(
        st.sampled_from(BASE_TYPES + [NAT]),
        lambda inner: st.one_of(
            st.builds(And, inner, inner),
            st.builds(Or, inner, inner),
            st.builds(Not, inner),
        ),
        max_leaves=max_leaves,
    )


class _TypedBuilder:
    """
    按类型自顶向下构造表达式

    需要叶子时复用作用域内同类型的名字，或者新建一个自由名字并记入 Γ/Δ，
    因此得到的判断总是可以推导。
    """

    def __init__(self, draw, fixpoints: bool):
        self.draw = draw
        self.fixpoints = fixpoints
        self.supply = NameSupply(["A", "B", "X", "X0"])
        self.gamma: dict[Name, TypeExpr] = {}
        self.delta: dict[Name, TypeExpr] = {}

    def _cut_type(self, ty: TypeExpr) -> TypeExpr:
        return self.draw(st.sampled_from([ty] + BASE_TYPES))

    def _leaf(self, ty: TypeExpr, scope: dict[Name, TypeExpr], variable: bool):
        free = self.gamma if variable else self.delta
        named = list(scope.items()) + list(free.items())
        candidates = [n for n, t in named if n.is_variable == variable and t == ty]
        if candidates and self.draw(st.booleans()):
            return self.draw(st.sampled_from(candidates))
        name = self.supply.fresh_var("x") if variable else self.supply.fresh_covar("k")
        free[name] = ty
        return name

    def statement(self, ty: TypeExpr, depth: int, scope: dict[Name, TypeExpr]) -> Cut:
        return Cut(self.term(ty, depth, scope), self.coterm(ty, depth, scope), ann=ty)

    def term(self, ty: TypeExpr, depth: int, scope: dict[Name, TypeExpr]) -> Term:
        choice = self.draw(st.integers(0, 2)) if depth > 0 else 0
        if choice == 1:
            match ty:
                case And(left, right):
                    return Pair(
                        self.term(left, depth - 1, scope), self.term(right, depth - 1, scope)
                    )
                case Or(left, right):
                    if self.draw(st.booleans()):
                        return Inl(self.term(left, depth - 1, scope))
                    return Inr(self.term(right, depth - 1, scope))
                case Not(body):
                    return NotIntro(self.coterm(body, depth - 1, scope))
            if self.fixpoints and ty == NAT:
                if self.draw(st.booleans()):
                    return In(NAT, Inl(self.term(TOP, depth - 1, scope), ann=NAT_BODY))
                return In(NAT, Inr(self.term(NAT, depth - 1, scope), ann=NAT_BODY))
        if choice == 2:
            alpha = self.supply.fresh_covar("a")
            inner = {**scope, alpha: ty}
            return BindCo(self.statement(self._cut_type(ty), depth - 1, inner), alpha)
        return Var(self._leaf(ty, scope, variable=True))

    def coterm(self, ty: TypeExpr, depth: int, scope: dict[Name, TypeExpr]) -> Coterm:
        choice = self.draw(st.integers(0, 2)) if depth > 0 else 0
        if choice == 1:
            match ty:
                case And(left, right):
                    if self.draw(st.booleans()):
                        return Fst(self.coterm(left, depth - 1, scope))
                    return Snd(self.coterm(right, depth - 1, scope))
                case Or(left, right):
                    return Case(
                        self.coterm(left, depth - 1, scope), self.coterm(right, depth - 1, scope)
                    )
                case Not(body):
                    return NotElim(self.term(body, depth - 1, scope))
            if self.fixpoints and ty == NAT:
                carrier = self.draw(st.sampled_from(BASE_TYPES))
                alpha = self.supply.fresh_covar("a")
                step = self.coterm(Or(TOP, carrier), depth - 1, {**scope, alpha: carrier})
                return Itr(carrier, alpha, step, self.coterm(carrier, depth - 1, scope))
        if choice == 2:
            x = self.supply.fresh_var("y")
            inner = {**scope, x: ty}
            return BindVar(x, self.statement(self._cut_type(ty), depth - 1, inner))
        return Covar(self._leaf(ty, scope, variable=False))


@st.composite
def typed_judgments(
    draw, max_depth: int = 3, fixpoints: bool = False, sort: Optional[str] = None
) -> Judgment:
    """Γ ⊢ Δ | M:A、K:A | Γ ⊢ Δ 或 Γ | S ⊢ Δ，且一定可以推导"""
    ty = draw(dcmunu_types() if fixpoints else dc_types())
    builder = _TypedBuilder(draw, fixpoints)
    depth = draw(st.integers(1, max_depth))
    sort = sort or draw(st.sampled_from(["term", "coterm", "stmt"]))
    if sort == "term":
        return judgment(builder.term(ty, depth, {}), ty, builder.gamma, builder.delta)
    if sort == "coterm":
        return judgment(builder.coterm(ty, depth, {}), ty, builder.gamma, builder.delta)
    principal = builder.statement(ty, depth, {})
    return judgment(principal, None, builder.gamma, builder.delta)


# ---------------------------------------------------------------------------
# 无类型的小表达式
# ---------------------------------------------------------------------------

_VARS = [var(n) for n in ("x", "y", "z")]
_COVARS = [covar(n) for n in ("a", "b", "c")]


@st.composite
def untyped_exprs(draw, max_depth: int = 4) -> Expr:
    """只用 DC 构造子的小表达式，名字取自很少几个，便于产生捕获与重名"""

    def term(depth: int) -> Term:
        choice = draw(st.integers(0, 5)) if depth > 0 else 0
        match choice:
            case 1:
                return Pair(term(depth - 1), term(depth - 1))
            case 2:
                return Inl(term(depth - 1))
            case 3:
                return Inr(term(depth - 1))
            case 4:
                return NotIntro(coterm(depth - 1))
            case 5:
                return BindCo(statement(depth - 1), draw(st.sampled_from(_COVARS)))
        return Var(draw(st.sampled_from(_VARS)))

    def coterm(depth: int) -> Coterm:
        choice = draw(st.integers(0, 5)) if depth > 0 else 0
        match choice:
            case 1:
                return Case(coterm(depth - 1), coterm(depth - 1))
            case 2:
                return Fst(coterm(depth - 1))
            case 3:
                return Snd(coterm(depth - 1))
            case 4:
                return NotElim(term(depth - 1))
            case 5:
                return BindVar(draw(st.sampled_from(_VARS)), statement(depth - 1))
        return Covar(draw(st.sampled_from(_COVARS)))

    def statement(depth: int) -> Cut:
        return Cut(term(depth), coterm(depth))

    kind = draw(st.sampled_from(["term", "coterm", "stmt"]))
    return {"term": term, "coterm": coterm, "stmt": statement}[kind](max_depth)

"""
从 DCμν 到 DC2 的翻译：用二阶量词编码归纳/余归纳类型

μX.A 编码为 ∀X.((A⊃X)⊃X)，νX.A 编码为 ∃X.(¬(¬A∧X)∧X)。in 的像借助 mono 构造，
out 与 coitr 的像取对偶表达式的像再取对偶。翻译按 deg(D) 递归，
在 in 处断言 mono 表达式的度严格小于 in 表达式的度。
"""

from __future__ import annotations

from typing import Optional

from ..duality.involution import dual_expr
from ..errors import TranslationError
from ..mono.construct import mono_coterm, mono_request
from ..reduction.measures import degree
from ..stdlib.sugar import at, lam, lam2
from ..syntax.names import NameSupply
from ..syntax.terms import (
    BindCo,
    BindVar,
    Case,
    Coitr,
    Coterm,
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
    TyAbs,
    TyInst,
    TyPack,
    TyUnpack,
    Var,
)
from ..syntax.traversal import supply_for
from ..syntax.types import (
    And,
    Exists,
    Forall,
    Meta,
    Mu,
    Not,
    Nu,
    Or,
    System,
    TypeExpr,
    TyVar,
    implies,
    subst_type,
)
from ..typecheck.context import Context, Judgment


def overline_type(t: TypeExpr) -> TypeExpr:
    match t:
        case TyVar() | Meta():
            return t
        case And(left, right):
            return And(overline_type(left), overline_type(right))
        case Or(left, right):
            return Or(overline_type(left), overline_type(right))
        case Not(body):
            return Not(overline_type(body))
        case Mu(binder, body):
            x = TyVar(binder)
            return Forall(binder, implies(implies(overline_type(body), x), x))
        case Nu(binder, body):
            x = TyVar(binder)
            return Exists(binder, And(Not(And(Not(overline_type(body)), x)), x))
        case Forall(binder, body) | Exists(binder, body):
            return type(t)(binder, overline_type(body))
    raise TypeError(f"未知类型: {t!r}")


def _opt(t: Optional[TypeExpr]) -> Optional[TypeExpr]:
    return overline_type(t) if t is not None else None


class _Overline:
    def __init__(self, supply: NameSupply):
        self.supply = supply

    def expr(self, e: Expr) -> Expr:
        match e:
            case Var() | Covar():
                return e
            case Pair(left, right):
                return Pair(self.expr(left), self.expr(right))
            case Case(left, right):
                return Case(self.expr(left), self.expr(right))
            case Inl(body, ann):
                return Inl(self.expr(body), _opt(ann))
            case Inr(body, ann):
                return Inr(self.expr(body), _opt(ann))
            case Fst(body, ann):
                return Fst(self.expr(body), _opt(ann))
            case Snd(body, ann):
                return Snd(self.expr(body), _opt(ann))
            case NotIntro(body):
                return NotIntro(self.expr(body))
            case NotElim(body):
                return NotElim(self.expr(body))
            case BindCo(body, binder):
                return BindCo(self.expr(body), binder)
            case BindVar(binder, body):
                return BindVar(binder, self.expr(body))
            case Cut(term, coterm, ann):
                return Cut(self.expr(term), self.expr(coterm), _opt(ann))
            case In():
                return self.fold(e)
            case Itr():
                return self.iterate(e)
            case Out() | Coitr():
                return dual_expr(self.expr(dual_expr(e)))
            case TyAbs(body, eigen):
                return TyAbs(self.expr(body), eigen)
            case TyUnpack(body, eigen):
                return TyUnpack(self.expr(body), eigen)
            case TyPack(body, witness):
                return TyPack(self.expr(body), _opt(witness))
            case TyInst(body, witness):
                return TyInst(self.expr(body), _opt(witness))
        raise TypeError(f"未知表达式: {e!r}")

    def iterate(self, e: Itr) -> Coterm:
        """itr^B_α[K, L] ↦ a[(λ(x,α).(x • K̄)) @ L̄]"""
        carrier = overline_type(e.ann)
        x = self.supply.fresh_var("x")
        body = Cut(Var(x), self.expr(e.step))
        return TyInst(at(lam2(x, e.binder, body, supply=self.supply), self.expr(e.cont)), carrier)

    def fold(self, e: In) -> Term:
        """in^{μX.A}⟨M⟩ ↦ ⟨λ(y,β).(y • ((Q_Y[X.A] • R_M{y,γ}).γ @ β))⟩a"""
        if not isinstance(e.ann, Mu):
            raise TranslationError(f"in 的注解必须是 μ 类型: {e.ann}")
        x_name, a = e.ann.binder, e.ann.body
        y_type = TyVar(self.supply.fresh_type("Y"))
        mu_bar = overline_type(e.ann)
        a_bar = overline_type(a)
        a_bar_mu = subst_type(a_bar, mu_bar, x_name)
        a_bar_y = subst_type(a_bar, y_type, x_name)

        y = self.supply.fresh_var("y")
        beta = self.supply.fresh_covar("b")
        gamma = self.supply.fresh_covar("c")
        q = self.functor_map(e, y_type, a_bar_mu, a_bar_y)
        r = self.stack(e.body, Var(y), Covar(gamma), mu_bar, y_type)
        map_type = implies(implies(mu_bar, y_type), implies(a_bar_mu, a_bar_y))
        mapped = BindCo(Cut(q, r, ann=map_type), gamma)
        body = Cut(Var(y), at(mapped, Covar(beta)), ann=implies(a_bar_y, y_type))
        handler = lam2(y, beta, body, implies(a_bar_y, y_type), y_type, supply=self.supply)
        return TyAbs(handler, y_type.name)

    def functor_map(self, e: In, y_type: TyVar, a_bar_mu: TypeExpr, a_bar_y: TypeExpr) -> Term:
        """Q_Y[X.A] = λy.λ(z,β).(z • overline(mono^{X.A}_{μX.A,Y,α}{x.(y • (x@α)), β}))"""
        mu = e.ann
        y = self.supply.fresh_var("y")
        z = self.supply.fresh_var("z")
        x = self.supply.fresh_var("x")
        alpha = self.supply.fresh_covar("a")
        beta = self.supply.fresh_covar("b")
        apply_y = BindVar(x, Cut(Var(y), at(Var(x), Covar(alpha)), ann=implies(mu, y_type)))
        request = mono_request(
            mu.binder, mu.body, mu, y_type, alpha, apply_y, Covar(beta), self.supply
        )
        mapped = mono_coterm(request)
        if degree(mapped) >= degree(e):
            raise TranslationError(
                f"度没有严格下降: deg(mono) = {degree(mapped)}, deg(in) = {degree(e)}"
            )
        body = Cut(Var(z), self.expr(mapped), ann=a_bar_mu)
        inner = lam2(z, beta, body, a_bar_mu, a_bar_y, supply=self.supply)
        mu_bar = overline_type(mu)
        return lam(
            y, inner, implies(mu_bar, y_type), implies(a_bar_mu, a_bar_y), supply=self.supply
        )

    def stack(self, m: Term, n: Term, k: Coterm, mu_bar: TypeExpr, y_type: TyVar) -> Coterm:
        """R_M{N, K} = (λ(x,α).(x • a[N@α])) @ (M̄ @ K)"""
        x = self.supply.fresh_var("x")
        alpha = self.supply.fresh_covar("a")
        body = Cut(Var(x), TyInst(at(n, Covar(alpha)), y_type), ann=mu_bar)
        head = lam2(x, alpha, body, mu_bar, y_type, supply=self.supply)
        return at(head, at(self.expr(m), k))


def overline_expr(e: Expr, *, supply: Optional[NameSupply] = None, seed: int = 0) -> Expr:
    """DCμν 表达式的像；新名字取自 supply（默认避开 e 中出现的全部名字）"""
    supply = supply if supply is not None else supply_for(e, seed=seed)
    return _Overline(supply).expr(e)


def overline_context(ctx: Context) -> Context:
    return ctx.map_types(overline_type)


def overline_judgment(j: Judgment, *, seed: int = 0) -> Judgment:
    """Γ ⊢ Δ | M:A ↦ Γ̄ ⊢ Δ̄ | M̄:Ā，结果属于 DC2"""
    types = list(j.gamma.values()) + list(j.delta.values())
    if j.type is not None:
        types.append(j.type)
    supply = supply_for(j.principal, seed=seed, types=types)
    return Judgment(
        overline_context(j.gamma),
        overline_context(j.delta),
        overline_expr(j.principal, supply=supply),
        _opt(j.type),
        System.DC2,
    )

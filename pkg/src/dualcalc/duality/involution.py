"""
对偶变换 (−)°

项与余项互换，∧↔∨，μ↔ν，∀↔∃，变量 x 与余变量 'x 互换。对类型、表达式、判断、推导与规则名都是对合。
"""

from __future__ import annotations

from typing import Optional, Sequence

from ..syntax.terms import (
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
    TyAbs,
    TyInst,
    TyPack,
    TyUnpack,
    Var,
)
from ..syntax.traversal import Path, children
from ..syntax.types import And, Exists, Forall, Meta, Mu, Not, Nu, Or, TypeExpr, TyVar
from ..typecheck.context import Context, Judgment
from ..typecheck.derivation import Derivation, RuleName

_TYPE_DUALS: dict[type, type] = {
    And: Or,
    Or: And,
    Mu: Nu,
    Nu: Mu,
    Forall: Exists,
    Exists: Forall,
}

RULE_DUALS: dict[RuleName, RuleName] = {}
for _a, _b in [
    (RuleName.AX_R, RuleName.AX_L),
    (RuleName.AND_R, RuleName.OR_L),
    (RuleName.OR_R1, RuleName.AND_L1),
    (RuleName.OR_R2, RuleName.AND_L2),
    (RuleName.NOT_R, RuleName.NOT_L),
    (RuleName.I_R, RuleName.I_L),
    (RuleName.MU_R, RuleName.NU_L),
    (RuleName.MU_L, RuleName.NU_R),
    (RuleName.FORALL_R, RuleName.EXISTS_L),
    (RuleName.FORALL_L, RuleName.EXISTS_R),
    (RuleName.FORALL_R_PRIMED, RuleName.EXISTS_L_PRIMED),
    (RuleName.FORALL_L_PRIMED, RuleName.EXISTS_R_PRIMED),
]:
    RULE_DUALS[_a] = _b
    RULE_DUALS[_b] = _a
RULE_DUALS[RuleName.CUT] = RuleName.CUT


def dual_type(t: TypeExpr) -> TypeExpr:
    match t:
        case TyVar() | Meta():
            return t
        case And(left, right) | Or(left, right):
            return _TYPE_DUALS[type(t)](dual_type(left), dual_type(right))
        case Not(body):
            return Not(dual_type(body))
        case Mu(binder, body) | Nu(binder, body) | Forall(binder, body) | Exists(binder, body):
            return _TYPE_DUALS[type(t)](binder, dual_type(body))
    raise TypeError(f"未知类型: {t!r}")


def _opt(t: Optional[TypeExpr]) -> Optional[TypeExpr]:
    return dual_type(t) if t is not None else None


def dual_expr(e: Expr) -> Expr:
    """表达式的对偶；项变为余项，余项变为项，语句保持为语句"""
    match e:
        case Var(name):
            return Covar(name.toggle())
        case Covar(name):
            return Var(name.toggle())
        case Pair(left, right):
            return Case(dual_expr(left), dual_expr(right))
        case Case(left, right):
            return Pair(dual_expr(left), dual_expr(right))
        case Inl(body, ann):
            return Fst(dual_expr(body), _opt(ann))
        case Inr(body, ann):
            return Snd(dual_expr(body), _opt(ann))
        case Fst(body, ann):
            return Inl(dual_expr(body), _opt(ann))
        case Snd(body, ann):
            return Inr(dual_expr(body), _opt(ann))
        case NotIntro(body):
            return NotElim(dual_expr(body))
        case NotElim(body):
            return NotIntro(dual_expr(body))
        case BindCo(body, binder):
            return BindVar(binder.toggle(), dual_expr(body))
        case BindVar(binder, body):
            return BindCo(dual_expr(body), binder.toggle())
        case In(ann, body):
            return Out(dual_type(ann), dual_expr(body))
        case Out(ann, body):
            return In(dual_type(ann), dual_expr(body))
        case Itr(ann, binder, step, cont):
            return Coitr(dual_type(ann), binder.toggle(), dual_expr(step), dual_expr(cont))
        case Coitr(ann, binder, step, seed):
            return Itr(dual_type(ann), binder.toggle(), dual_expr(step), dual_expr(seed))
        case TyAbs(body, eigen):
            return TyUnpack(dual_expr(body), eigen)
        case TyUnpack(body, eigen):
            return TyAbs(dual_expr(body), eigen)
        case TyPack(body, witness):
            return TyInst(dual_expr(body), _opt(witness))
        case TyInst(body, witness):
            return TyPack(dual_expr(body), _opt(witness))
        case Cut(term, coterm, ann):
            return Cut(dual_expr(coterm), dual_expr(term), _opt(ann))
    raise TypeError(f"未知表达式: {e!r}")


def dual_context(ctx: Context) -> Context:
    return Context({name.toggle(): dual_type(t) for name, t in ctx.items()})


def dual_judgment(j: Judgment) -> Judgment:
    """(Γ ⊢ Δ | M:A)° = M°:A° | Δ° ⊢ Γ°"""
    return Judgment(
        dual_context(j.delta),
        dual_context(j.gamma),
        dual_expr(j.principal),
        _opt(j.type),
        j.system,
    )


def dual_rule(rule: RuleName) -> RuleName:
    return RULE_DUALS[rule]


def dual_derivation(d: Derivation) -> Derivation:
    """推导树的对偶；切割的两个前提交换次序，与对偶表达式的子节点次序一致"""
    premises = [dual_derivation(p) for p in d.premises]
    if d.rule is RuleName.CUT:
        premises.reverse()
    return Derivation(
        dual_rule(d.rule),
        dual_judgment(d.conclusion),
        tuple(premises),
        d.eigenvariable,
        _opt(d.witness),
    )


def dual_path(e: Expr, path: Sequence[int]) -> Path:
    """e 中的位置在 e° 中的对应位置：只有切割交换左右"""
    result = []
    node = e
    for index in path:
        result.append(1 - index if isinstance(node, Cut) else index)
        node = children(node)[index]
    return tuple(result)

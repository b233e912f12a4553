"""
可约式的识别与收缩

redexes 按前序位置（外层优先、自左向右）列出策略允许的全部可约式；同一位置上 (βR) 排在 (βL) 之前。
contract 实例化规则右部，需要的新名字一律取自传入的名字供给。
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from ..duality.involution import dual_expr
from ..errors import InvalidRedex
from ..mono.construct import MonoRequest, mono_coterm, mono_term
from ..syntax.names import NameSupply
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
    Term,
    TyAbs,
    TyInst,
    TyPack,
    TyUnpack,
    Var,
)
from ..syntax.traversal import (
    Path,
    alpha_eq,
    free_covars,
    free_vars,
    positions,
    rename_free,
    subst_coterm,
    subst_term,
    subst_type_in_expr,
)
from ..syntax.types import (
    And,
    Exists,
    Forall,
    Mu,
    Not,
    Nu,
    Or,
    System,
    TypeExpr,
    TyVar,
    free_type_vars,
    subst_type,
)
from .rules import Mode, ReductionRule, RuleLabel, Strategy
from .values import is_covalue, is_value

R = ReductionRule


@dataclass(frozen=True)
class Redex:
    """可约式：位置路径与规则标签"""

    path: Path
    label: RuleLabel

    @property
    def rule(self) -> ReductionRule:
        return self.label.rule

    def __str__(self) -> str:
        where = ".".join(map(str, self.path)) if self.path else "ε"
        return f"{self.label} @ {where}"


# ---------------------------------------------------------------------------
# 识别
# ---------------------------------------------------------------------------


def _ok_value(mode: Optional[Mode], m: Expr) -> bool:
    return mode is not Mode.VALUE or is_value(m)


def _ok_covalue(mode: Optional[Mode], k: Expr) -> bool:
    return mode is not Mode.NAME or is_covalue(k)


def _cut_rules(cut: Cut, strategy: Strategy) -> list[ReductionRule]:
    m, k = cut.term, cut.coterm
    mode = strategy.mode
    found: list[ReductionRule] = []
    match m, k:
        case Pair(left, right), Fst(body) | Snd(body):
            if _ok_value(mode, left) and _ok_value(mode, right) and _ok_covalue(mode, body):
                found.append(R.BETA_AND1 if isinstance(k, Fst) else R.BETA_AND2)
        case Inl(body) | Inr(body), Case(left, right):
            if _ok_value(mode, body) and _ok_covalue(mode, left) and _ok_covalue(mode, right):
                found.append(R.BETA_OR1 if isinstance(m, Inl) else R.BETA_OR2)
        case NotIntro(), NotElim():
            found.append(R.BETA_NOT)
        case In(_, body), Itr(cont=cont):
            if strategy.system is not System.DC:
                if _ok_value(mode, body) and _ok_covalue(mode, cont):
                    found.append(R.BETA_MU)
        case Coitr(seed=seed), Out(_, body):
            if strategy.system is not System.DC:
                if _ok_value(mode, seed) and _ok_covalue(mode, body):
                    found.append(R.BETA_NU)
        case TyAbs(), TyInst():
            found.append(R.BETA_FORALL)
        case TyPack(), TyUnpack():
            found.append(R.BETA_EXISTS)
    if isinstance(m, BindCo) and _ok_covalue(mode, k):
        found.append(R.BETA_R)
    if isinstance(k, BindVar) and _ok_value(mode, m):
        found.append(R.BETA_L)
    return found


def _is_eta_r(e: BindCo) -> bool:
    s = e.body
    return (
        isinstance(s.coterm, Covar)
        and s.coterm.name == e.binder
        and e.binder not in free_covars(s.term)
    )


def _is_eta_l(e: BindVar) -> bool:
    s = e.body
    return (
        isinstance(s.term, Var) and s.term.name == e.binder and e.binder not in free_vars(s.coterm)
    )


def _is_eta_or(e: Case) -> bool:
    """[x.(⟨x⟩inl • K), y.(⟨y⟩inr • K)]"""
    left, right = e.left, e.right
    if not (isinstance(left, BindVar) and isinstance(right, BindVar)):
        return False
    lt, rt = left.body.term, right.body.term
    return (
        isinstance(lt, Inl)
        and lt.body == Var(left.binder)
        and isinstance(rt, Inr)
        and rt.body == Var(right.binder)
        and left.binder not in free_vars(left.body.coterm)
        and right.binder not in free_vars(right.body.coterm)
        and alpha_eq(left.body.coterm, right.body.coterm)
    )


def _is_eta_and(e: Pair) -> bool:
    """⟨(M • fst[α]).α, (M • snd[β]).β⟩"""
    left, right = e.left, e.right
    if not (isinstance(left, BindCo) and isinstance(right, BindCo)):
        return False
    lk, rk = left.body.coterm, right.body.coterm
    return (
        isinstance(lk, Fst)
        and lk.body == Covar(left.binder)
        and isinstance(rk, Snd)
        and rk.body == Covar(right.binder)
        and left.binder not in free_covars(left.body.term)
        and right.binder not in free_covars(right.body.term)
        and alpha_eq(left.body.term, right.body.term)
    )


def _sigma_rule(e: Expr, strategy: Strategy) -> Optional[ReductionRule]:
    if strategy.mode is Mode.VALUE:
        match e:
            case Pair(left, right):
                if not is_value(left):
                    return R.SIGMA_AND1
                if not is_value(right):
                    return R.SIGMA_AND2
            case Inl(body) if not is_value(body):
                return R.SIGMA_OR1
            case Inr(body) if not is_value(body):
                return R.SIGMA_OR2
            case In(_, body) if not is_value(body):
                return R.SIGMA_MU
            case Coitr(seed=seed) if not is_value(seed):
                return R.SIGMA_NU
    else:
        match e:
            case Case(left, right):
                if not is_covalue(left):
                    return R.SIGMA_OR1
                if not is_covalue(right):
                    return R.SIGMA_OR2
            case Fst(body) if not is_covalue(body):
                return R.SIGMA_AND1
            case Snd(body) if not is_covalue(body):
                return R.SIGMA_AND2
            case Out(_, body) if not is_covalue(body):
                return R.SIGMA_NU
            case Itr(cont=cont) if not is_covalue(cont):
                return R.SIGMA_MU
    return None


def rules_at(e: Expr, strategy: Strategy) -> list[ReductionRule]:
    """在表达式根部适用的规则"""
    found: list[ReductionRule] = []
    if isinstance(e, Cut):
        found.extend(_cut_rules(e, strategy))
    elif isinstance(e, BindCo) and _is_eta_r(e):
        found.append(R.ETA_R)
    elif isinstance(e, BindVar) and _is_eta_l(e):
        found.append(R.ETA_L)
    if strategy.eta_or:
        if isinstance(e, Case) and _is_eta_or(e):
            found.append(R.ETA_OR)
        elif isinstance(e, Pair) and _is_eta_and(e):
            found.append(R.ETA_AND)
    if strategy.has_sigma:
        sigma = _sigma_rule(e, strategy)
        if sigma is not None:
            found.append(sigma)
    return found


def redexes(e: Expr, strategy: Strategy) -> list[Redex]:
    """策略下 e 的全部可约式，按前序位置排列"""
    mode = strategy.mode
    found = []
    for path, node in positions(e):
        for rule in rules_at(node, strategy):
            found.append(Redex(path, RuleLabel(rule, mode)))
    return found


def is_normal(e: Expr, strategy: Strategy) -> bool:
    return not any(rules_at(node, strategy) for _, node in positions(e))


# ---------------------------------------------------------------------------
# 收缩
# ---------------------------------------------------------------------------


def _part(ann: Optional[TypeExpr], cls: type, index: int) -> Optional[TypeExpr]:
    if not isinstance(ann, cls):
        return None
    if cls is Not:
        return ann.body
    return ann.left if index == 0 else ann.right


def _freshen_binder(q: Mu | Nu, carrier: TypeExpr, supply: NameSupply) -> Mu | Nu:
    """绑定变量在载体类型中自由出现时换名"""
    if q.binder not in free_type_vars(carrier):
        return q
    renamed = supply.fresh_type(q.binder)
    return type(q)(renamed, subst_type(q.body, TyVar(renamed), q.binder))


def _beta_mu(cut: Cut, supply: NameSupply) -> Expr:
    """in⟨M⟩ • itr_α[K,L] → (M •:C[μ] mono^{X.C}_{μX.C,A,β}{itr_α[K,β], K}).α •:A L"""
    m: In = cut.term
    k: Itr = cut.coterm
    carrier = k.ann
    if not isinstance(m.ann, Mu):
        raise InvalidRedex((), R.BETA_MU)
    mu = _freshen_binder(m.ann, carrier, supply)
    alpha, step = k.binder, k.step
    if alpha in free_covars(m.body):
        renamed = supply.fresh_like(alpha)
        step = rename_free(step, alpha, renamed, supply)
        alpha = renamed
    beta = supply.fresh_covar("b")
    body = Itr(carrier, alpha, step, Covar(beta))
    mapped = mono_coterm(MonoRequest(mu.binder, mu.body, mu, carrier, beta, body, step, supply))
    unfolded = subst_type(mu.body, mu, mu.binder)
    return Cut(BindCo(Cut(m.body, mapped, ann=unfolded), alpha), k.cont, ann=carrier)


def _beta_nu(cut: Cut, supply: NameSupply) -> Expr:
    """coitr_x⟨M,N⟩ • out[K] → N •:A x.(mono^{X.C}_{A,νX.C,z}{coitr_x⟨M,z⟩, M} •:C[ν] K)"""
    m: Coitr = cut.term
    k: Out = cut.coterm
    carrier = m.ann
    if not isinstance(k.ann, Nu):
        raise InvalidRedex((), R.BETA_NU)
    nu = _freshen_binder(k.ann, carrier, supply)
    x, step = m.binder, m.step
    if x in free_vars(k.body):
        renamed = supply.fresh_like(x)
        step = rename_free(step, x, renamed, supply)
        x = renamed
    z = supply.fresh_var("z")
    body = Coitr(carrier, x, step, Var(z))
    mapped = mono_term(MonoRequest(nu.binder, nu.body, carrier, nu, z, body, step, supply))
    unfolded = subst_type(nu.body, nu, nu.binder)
    return Cut(m.seed, BindVar(x, Cut(mapped, k.body, ann=unfolded)), ann=carrier)


def _instantiate(
    cut_ann: Optional[TypeExpr], cls: type, eigen: Optional[str], witness: Optional[TypeExpr]
) -> tuple[Optional[str], Optional[TypeExpr]]:
    """(β∀)/(β∃) 中需要替换的类型变量与新的切割类型"""
    binder = eigen
    new_ann = None
    if isinstance(cut_ann, cls):
        binder = binder or cut_ann.binder
        if witness is not None:
            new_ann = subst_type(cut_ann.body, witness, cut_ann.binder)
    return binder, new_ann


def _sigma_value(e: Term, rule: ReductionRule, supply: NameSupply) -> Term:
    """值调用 ς：把非值子项 𝓜 提到切割左侧，(𝓜 • x.(C[x] • α)).α"""
    x = supply.fresh_var("x")
    alpha = supply.fresh_covar("a")
    hole_ann: Optional[TypeExpr] = None
    match rule, e:
        case R.SIGMA_AND1, Pair(left, right):
            lifted, rebuilt = left, Pair(Var(x), right)
        case R.SIGMA_AND2, Pair(left, right):
            lifted, rebuilt = right, Pair(left, Var(x))
        case R.SIGMA_OR1, Inl(body, ann):
            lifted, rebuilt, hole_ann = body, Inl(Var(x), ann), ann
        case R.SIGMA_OR2, Inr(body, ann):
            lifted, rebuilt, hole_ann = body, Inr(Var(x), ann), ann
        case R.SIGMA_MU, In(ann, body):
            lifted, rebuilt, hole_ann = body, In(ann, Var(x)), ann
        case R.SIGMA_NU, Coitr(ann, binder, step, seed):
            lifted, rebuilt = seed, Coitr(ann, binder, step, Var(x))
        case _:
            raise InvalidRedex((), rule)
    return BindCo(Cut(lifted, BindVar(x, Cut(rebuilt, Covar(alpha), ann=hole_ann))), alpha)


def contract(e: Expr, label: RuleLabel, supply: NameSupply) -> Expr:
    """收缩根部的可约式；调用方须保证规则适用"""
    rule = label.rule
    if rule.is_sigma:
        if label.mode is Mode.NAME:
            return dual_expr(_sigma_value(dual_expr(e), label.dual().rule, supply))
        return _sigma_value(e, rule, supply)
    match rule:
        case R.ETA_R:
            return e.body.term
        case R.ETA_L:
            return e.body.coterm
        case R.ETA_OR:
            return e.left.body.coterm
        case R.ETA_AND:
            return e.left.body.term
    cut: Cut = e
    m, k, ann = cut.term, cut.coterm, cut.ann
    match rule:
        case R.BETA_AND1:
            return Cut(m.left, k.body, ann=_part(ann, And, 0))
        case R.BETA_AND2:
            return Cut(m.right, k.body, ann=_part(ann, And, 1))
        case R.BETA_OR1:
            return Cut(m.body, k.left, ann=_part(ann, Or, 0))
        case R.BETA_OR2:
            return Cut(m.body, k.right, ann=_part(ann, Or, 1))
        case R.BETA_NOT:
            return Cut(k.body, m.body, ann=_part(ann, Not, 0))
        case R.BETA_R:
            return subst_coterm(m.body, k, m.binder, supply)
        case R.BETA_L:
            return subst_term(k.body, m, k.binder, supply)
        case R.BETA_MU:
            return _beta_mu(cut, supply)
        case R.BETA_NU:
            return _beta_nu(cut, supply)
        case R.BETA_FORALL:
            binder, new_ann = _instantiate(ann, Forall, m.eigen, k.witness)
            body = m.body
            if binder is not None and k.witness is not None:
                body = subst_type_in_expr(body, k.witness, binder)
            return Cut(body, k.body, ann=new_ann)
        case R.BETA_EXISTS:
            binder, new_ann = _instantiate(ann, Exists, k.eigen, m.witness)
            body = k.body
            if binder is not None and m.witness is not None:
                body = subst_type_in_expr(body, m.witness, binder)
            return Cut(m.body, body, ann=new_ann)
    raise InvalidRedex((), rule)


__all__ = [
    "Redex",
    "contract",
    "is_normal",
    "redexes",
    "rules_at",
]

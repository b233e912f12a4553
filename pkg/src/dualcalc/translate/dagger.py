"""
从 DC2 到 Sλ2 的翻译 (−)†

项与余项都译为 Sλ2 的项：余项 K : A 的像具有类型 (A†)⊥，语句的像具有类型 ⊥。
DC2 的每一步归约恰好对应 Sλ2 的一步归约。余变量 α 译为名字 'α，与变量不会冲突。
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..errors import TranslationError
from ..slambda2.checker import check_sl, is_sl_typable
from ..slambda2.terms import App, Inj1, Inj2, Lam, SLTerm, SPair, SVar, TAbs, TPack, fresh_sl_name
from ..slambda2.types import BOTTOM, ExistsT, ForallT, MType, MVar, Prod, SLType, Sum, neg
from ..syntax.terms import (
    BindCo,
    BindVar,
    Case,
    Covar,
    Cut,
    Expr,
    Fst,
    Inl,
    Inr,
    NotElim,
    NotIntro,
    Pair,
    Snd,
    Sort,
    TyAbs,
    TyInst,
    TyPack,
    TyUnpack,
    Var,
)
from ..syntax.traversal import all_names
from ..syntax.types import And, Exists, Forall, Not, Or, TypeExpr, TyVar
from ..typecheck.context import Judgment


def dagger_type(t: TypeExpr) -> MType:
    match t:
        case TyVar(name):
            return MVar(name)
        case And(left, right):
            return Prod(dagger_type(left), dagger_type(right))
        case Or(left, right):
            return Sum(dagger_type(left), dagger_type(right))
        case Not(body):
            return neg(dagger_type(body))
        case Forall(binder, body):
            return ForallT(binder, dagger_type(body))
        case Exists(binder, body):
            return ExistsT(binder, dagger_type(body))
    raise TranslationError(f"类型 {t} 不属于 DC2，不能译到 Sλ2")


def _opt(t: Optional[TypeExpr]) -> Optional[MType]:
    return dagger_type(t) if t is not None else None


class _Dagger:
    def __init__(self, avoid: set[str]):
        self.used = set(avoid)

    def fresh(self, hint: str) -> str:
        name = fresh_sl_name(hint, self.used)
        self.used.add(name)
        return name

    def expr(self, e: Expr) -> SLTerm:
        """
        逐构造子翻译；互为对偶的项与余项构造子译到同一个 Sλ2 构造子

            x†, α†                  = x, 'α
            ((S).α)†, (x.(S))†      = λ'α.S†, λx.S†
            (⟨M⟩a)†, (e[K])†        = a(M†), a(K†)
            (⟨M⟩e{B})†, (a{B}[K])†  = e{B†}(M†), e{B†}(K†)
            (⟨M⟩inl)†, (fst[K])†    = inj1(M†), inj1(K†)
            (⟨M⟩inr)†, (snd[K])†    = inj2(M†), inj2(K†)
            ⟨M, N⟩†, [K, L]†        = ⟨M†, N†⟩, ⟨K†, L†⟩
            ([K]not)†               = λx.(x * K†)
            (not⟨M⟩)†               = M†
            (M • K)†                = M† * K†
        """
        match e:
            case Var(name) | Covar(name):
                return SVar(str(name))
            case BindCo(body, binder) | BindVar(binder, body):
                return Lam(str(binder), self.expr(body))
            case TyAbs(body, eigen):
                return TAbs(self.expr(body), eigen)
            case TyPack(body, witness):
                return TPack(self.expr(body), _opt(witness))
            case TyUnpack(body, eigen):
                return TAbs(self.expr(body), eigen)
            case TyInst(body, witness):
                return TPack(self.expr(body), _opt(witness))
            case Inl(body) | Fst(body):
                return Inj1(self.expr(body))
            case Inr(body) | Snd(body):
                return Inj2(self.expr(body))
            case Pair(left, right) | Case(left, right):
                return SPair(self.expr(left), self.expr(right))
            case NotIntro(body):
                x = self.fresh("x")
                return Lam(x, App(SVar(x), self.expr(body)))
            case NotElim(body):
                return self.expr(body)
            case Cut(term, coterm, ann):
                return App(self.expr(term), self.expr(coterm), _opt(ann))
        raise TranslationError(f"构造子 {type(e).__name__} 不属于 DC2，不能译到 Sλ2")


def dagger_expr(e: Expr) -> SLTerm:
    return _Dagger({str(name) for name in all_names(e)}).expr(e)


@dataclass(frozen=True)
class SLJudgment:
    """Sλ2 判断 Γ ⊢ t : τ（语句的像 τ = ⊥）"""

    context: dict[str, MType] = field(hash=False)
    term: SLTerm
    type: SLType

    def check(self) -> SLType:
        return check_sl(self.context, self.term, self.type)

    def is_typable(self) -> bool:
        return is_sl_typable(self.context, self.term, self.type)


def dagger_judgment(j: Judgment) -> SLJudgment:
    """(Γ ⊢ Δ | M:A)† = Γ†, (Δ†)⊥ ⊢ M† : A†；余项取 (A†)⊥，语句取 ⊥"""
    context: dict[str, MType] = {str(x): dagger_type(t) for x, t in j.gamma.items()}
    context.update({str(a): neg(dagger_type(t)) for a, t in j.delta.items()})
    term = dagger_expr(j.principal)
    if j.principal.sort is Sort.STATEMENT:
        return SLJudgment(context, term, BOTTOM)
    ty = dagger_type(j.type)
    return SLJudgment(context, term, ty if j.principal.sort is Sort.TERM else neg(ty))

"""
表达式语言：项 (Term)、余项 (Coterm)、语句 (Statement) 三个种类

覆盖 DC、DCμν 与 DC2 的全部构造子。可选注解 (ann / witness / eigen) 只供类型检查使用，
归约忽略它们。
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import ClassVar, Optional

from .names import Name
from .types import TypeExpr


class Sort(str, Enum):
    TERM = "term"
    COTERM = "coterm"
    STATEMENT = "statement"


@dataclass(frozen=True)
class Expr:
    """表达式基类"""

    sort: ClassVar[Sort] = Sort.STATEMENT

    def __str__(self) -> str:
        from .printer import show_expr

        return show_expr(self)


@dataclass(frozen=True)
class Term(Expr):
    sort = Sort.TERM


@dataclass(frozen=True)
class Coterm(Expr):
    sort = Sort.COTERM


@dataclass(frozen=True)
class Statement(Expr):
    sort = Sort.STATEMENT


# ---------------------------------------------------------------------------
# 项
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Var(Term):
    name: Name


@dataclass(frozen=True)
class Pair(Term):
    left: Term
    right: Term


@dataclass(frozen=True)
class Inl(Term):
    """⟨M⟩inl；ann 为整个 ∨ 类型"""

    body: Term
    ann: Optional[TypeExpr] = None


@dataclass(frozen=True)
class Inr(Term):
    body: Term
    ann: Optional[TypeExpr] = None


@dataclass(frozen=True)
class NotIntro(Term):
    """[K]not"""

    body: Coterm


@dataclass(frozen=True)
class BindCo(Term):
    """(S).α"""

    body: Statement
    binder: Name


@dataclass(frozen=True)
class In(Term):
    """in^{μX.A}⟨M⟩"""

    ann: TypeExpr
    body: Term


@dataclass(frozen=True)
class Coitr(Term):
    """coitr^B_x⟨M,N⟩，x 在 step 中绑定"""

    ann: TypeExpr
    binder: Name
    step: Term
    seed: Term


@dataclass(frozen=True)
class TyAbs(Term):
    """⟨M⟩a；eigen 可选地指定 (∀R) 使用的特征变量"""

    body: Term
    eigen: Optional[str] = None


@dataclass(frozen=True)
class TyPack(Term):
    """⟨M⟩e；witness 为 (∃R) 的实例类型"""

    body: Term
    witness: Optional[TypeExpr] = None


# ---------------------------------------------------------------------------
# 余项
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Covar(Coterm):
    name: Name


@dataclass(frozen=True)
class Case(Coterm):
    left: Coterm
    right: Coterm


@dataclass(frozen=True)
class Fst(Coterm):
    """fst[K]；ann 为整个 ∧ 类型"""

    body: Coterm
    ann: Optional[TypeExpr] = None


@dataclass(frozen=True)
class Snd(Coterm):
    body: Coterm
    ann: Optional[TypeExpr] = None


@dataclass(frozen=True)
class NotElim(Coterm):
    """not⟨M⟩"""

    body: Term


@dataclass(frozen=True)
class BindVar(Coterm):
    """x.(S)"""

    binder: Name
    body: Statement


@dataclass(frozen=True)
class Out(Coterm):
    """out^{νX.A}[K]"""

    ann: TypeExpr
    body: Coterm


@dataclass(frozen=True)
class Itr(Coterm):
    """itr^B_α[K,L]，α 在 step 中绑定"""

    ann: TypeExpr
    binder: Name
    step: Coterm
    cont: Coterm


@dataclass(frozen=True)
class TyInst(Coterm):
    """a[K]；witness 为 (∀L) 的实例类型"""

    body: Coterm
    witness: Optional[TypeExpr] = None


@dataclass(frozen=True)
class TyUnpack(Coterm):
    """e[K]；eigen 可选地指定 (∃L) 使用的特征变量"""

    body: Coterm
    eigen: Optional[str] = None


# ---------------------------------------------------------------------------
# 语句
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class Cut(Statement):
    """M • K；ann 为可选的切割类型"""

    term: Term
    coterm: Coterm
    ann: Optional[TypeExpr] = None


DC2_CONSTRUCTORS = (TyAbs, TyPack, TyInst, TyUnpack)
FIXPOINT_CONSTRUCTORS = (In, Coitr, Out, Itr)

CONSTRUCTOR_NAMES: dict[type, str] = {
    Var: "变量",
    Pair: "⟨,⟩",
    Inl: "inl",
    Inr: "inr",
    NotIntro: "[ ]not",
    BindCo: "( ).α",
    In: "in",
    Coitr: "coitr",
    TyAbs: "⟨ ⟩a",
    TyPack: "⟨ ⟩e",
    Covar: "余变量",
    Case: "[,]",
    Fst: "fst",
    Snd: "snd",
    NotElim: "not⟨ ⟩",
    BindVar: "x.( )",
    Out: "out",
    Itr: "itr",
    TyInst: "a[ ]",
    TyUnpack: "e[ ]",
    Cut: "•",
}

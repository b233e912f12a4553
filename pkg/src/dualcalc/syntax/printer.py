"""打印器：输出可被解析器读回的 ASCII 具体语法"""

from __future__ import annotations

from typing import Optional

from .terms import (
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
from .types import BINDER_KEYWORDS, And, Meta, Not, Or, Quantified, TypeExpr, TyVar

# 优先级：0 绑定/顶层，1 ∨，2 ∧，3 ¬/原子
_PREC_OR, _PREC_AND, _PREC_NOT = 1, 2, 3


def show_type(t: TypeExpr, prec: int = 0) -> str:
    match t:
        case TyVar(name):
            return name
        case Meta(ident):
            return f"?{ident}"
        case Not(body):
            return "~" + show_type(body, _PREC_NOT)
        case And(left, right):
            text = f"{show_type(left, _PREC_AND)} /\\ {show_type(right, _PREC_NOT)}"
            return f"({text})" if prec > _PREC_AND else text
        case Or(left, right):
            text = f"{show_type(left, _PREC_OR)} \\/ {show_type(right, _PREC_AND)}"
            return f"({text})" if prec > _PREC_OR else text
        case Quantified(binder=binder, body=body):
            text = f"{BINDER_KEYWORDS[type(t)]} {binder}. {show_type(body)}"
            return f"({text})" if prec > 0 else text
    raise TypeError(f"未知类型节点: {t!r}")


def _braced(t: Optional[TypeExpr]) -> str:
    return "" if t is None else "{" + show_type(t) + "}"


def _cut_type(t: TypeExpr) -> str:
    if isinstance(t, TyVar):
        return t.name
    return f"({show_type(t)})"


def show_expr(e: Expr) -> str:
    return _show(e, top=True)


def _show(e: Expr, top: bool = False) -> str:
    match e:
        case Var(name) | Covar(name):
            return str(name)
        case Pair(left, right):
            return f"<{_show(left)}, {_show(right)}>"
        case Inl(body, ann):
            return f"<{_show(body)}>inl{_braced(ann)}"
        case Inr(body, ann):
            return f"<{_show(body)}>inr{_braced(ann)}"
        case NotIntro(body):
            return f"[{_show(body)}]not"
        case BindCo(body, binder):
            return f"({_show(body, top=True)}).{binder}"
        case In(ann, body):
            return f"in{_braced(ann)}<{_show(body)}>"
        case Coitr(ann, binder, step, seed):
            return f"coitr{_braced(ann)} {binder} <{_show(step)}, {_show(seed)}>"
        case TyAbs(body, eigen):
            return f"<{_show(body)}>a" + ("" if eigen is None else "{" + eigen + "}")
        case TyPack(body, witness):
            return f"<{_show(body)}>e{_braced(witness)}"
        case Case(left, right):
            return f"[{_show(left)}, {_show(right)}]"
        case Fst(body, ann):
            return f"fst{_braced(ann)}[{_show(body)}]"
        case Snd(body, ann):
            return f"snd{_braced(ann)}[{_show(body)}]"
        case NotElim(body):
            return f"not<{_show(body)}>"
        case BindVar(binder, body):
            return f"{binder}.({_show(body, top=True)})"
        case Out(ann, body):
            return f"out{_braced(ann)}[{_show(body)}]"
        case Itr(ann, binder, step, cont):
            return f"itr{_braced(ann)} {binder} [{_show(step)}, {_show(cont)}]"
        case TyInst(body, witness):
            return f"a{_braced(witness)}[{_show(body)}]"
        case TyUnpack(body, eigen):
            return "e" + ("" if eigen is None else "{" + eigen + "}") + f"[{_show(body)}]"
        case Cut(term, coterm, ann):
            op = "*" if ann is None else f"*:{_cut_type(ann)}"
            return f"{_show(term)} {op} {_show(coterm)}"
    raise TypeError(f"未知表达式节点: {e!r}")


def show_context(ctx) -> str:
    return ", ".join(f"{name} : {show_type(ty)}" for name, ty in ctx.items())


def show_judgment(judgment) -> str:
    """按判断形状打印：Γ |- Δ | M : A、K : A | Γ |- Δ 或 Γ | S |- Δ"""
    from .terms import Sort

    gamma = show_context(judgment.gamma)
    delta = show_context(judgment.delta)
    principal = show_expr(judgment.principal)
    if judgment.principal.sort is Sort.TERM:
        return f"{gamma} |- {delta} | {principal} : {show_type(judgment.type)}".strip()
    if judgment.principal.sort is Sort.COTERM:
        return f"{principal} : {show_type(judgment.type)} | {gamma} |- {delta}".strip()
    return f"{gamma} | {principal} |- {delta}".strip()

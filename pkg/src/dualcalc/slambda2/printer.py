"""Sλ2 的打印器，输出可被 sl 解析器读回的语法"""

from __future__ import annotations

from typing import Optional

from .terms import App, Inj1, Inj2, Lam, SLTerm, SPair, SVar, TAbs, TPack
from .types import Bottom, ExistsT, ForallT, MNeg, MType, MVar, Prod, SLType, Sum

_PREC_SUM, _PREC_PROD, _PREC_ATOM = 1, 2, 3


def show_mtype(t: SLType, prec: int = 0) -> str:
    match t:
        case Bottom():
            return "⊥"
        case MVar(name):
            return name
        case MNeg(name):
            return f"{name}^"
        case Prod(left, right):
            text = f"{show_mtype(left, _PREC_PROD)} & {show_mtype(right, _PREC_ATOM)}"
            return f"({text})" if prec > _PREC_PROD else text
        case Sum(left, right):
            text = f"{show_mtype(left, _PREC_SUM)} + {show_mtype(right, _PREC_PROD)}"
            return f"({text})" if prec > _PREC_SUM else text
        case ForallT(binder, body) | ExistsT(binder, body):
            word = "forall" if isinstance(t, ForallT) else "exists"
            text = f"{word} {binder}. {show_mtype(body)}"
            return f"({text})" if prec > 0 else text
    raise TypeError(f"未知 m-类型: {t!r}")


def _atomic_type(t: Optional[MType]) -> str:
    if t is None:
        return ""
    if isinstance(t, (MVar, MNeg)):
        return show_mtype(t)
    return f"({show_mtype(t)})"


def _atom(t: SLTerm) -> str:
    text = show_sl(t)
    return f"({text})" if isinstance(t, (Lam, App)) else text


def show_sl(t: SLTerm) -> str:
    match t:
        case SVar(name):
            return name
        case Inj1(body):
            return f"inj1({show_sl(body)})"
        case Inj2(body):
            return f"inj2({show_sl(body)})"
        case SPair(left, right):
            return f"<{show_sl(left)}, {show_sl(right)}>"
        case App(left, right, ann):
            op = "*" if ann is None else f"*:{_atomic_type(ann)}"
            return f"{_atom(left)} {op} {_atom(right)}"
        case Lam(binder, body, ann):
            head = binder if ann is None else f"{binder}:{_atomic_type(ann)}"
            return f"\\{head}. {show_sl(body)}"
        case TAbs(body, eigen):
            hint = "" if eigen is None else "{" + eigen + "}"
            return f"a{hint}({show_sl(body)})"
        case TPack(body, witness):
            hint = "" if witness is None else "{" + show_mtype(witness) + "}"
            return f"e{hint}({show_sl(body)})"
    raise TypeError(f"未知 Sλ2 项: {t!r}")

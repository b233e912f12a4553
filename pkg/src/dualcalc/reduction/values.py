"""值与余值"""

from __future__ import annotations

from ..syntax.terms import (
    Case,
    Coitr,
    Covar,
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
    Var,
)


def is_value(m: Expr) -> bool:
    """V ::= x | ⟨V,V⟩ | ⟨V⟩inl | ⟨V⟩inr | [K]not | in⟨V⟩ | coitr_x⟨M,V⟩"""
    match m:
        case Var() | NotIntro():
            return True
        case Pair(left, right):
            return is_value(left) and is_value(right)
        case Inl(body) | Inr(body) | In(_, body):
            return is_value(body)
        case Coitr(seed=seed):
            return is_value(seed)
    return False


def is_covalue(k: Expr) -> bool:
    """P ::= α | [P,P] | fst[P] | snd[P] | not⟨M⟩ | out[P] | itr_α[K,P]"""
    match k:
        case Covar() | NotElim():
            return True
        case Case(left, right):
            return is_covalue(left) and is_covalue(right)
        case Fst(body) | Snd(body) | Out(_, body):
            return is_covalue(body)
        case Itr(cont=cont):
            return is_covalue(cont)
    return False

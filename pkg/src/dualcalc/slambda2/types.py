"""
Sλ2 的类型

m-类型 τ ::= X | X⊥ | τ×τ | τ+τ | ∀X.τ | ∃X.τ，另有只用于判断的特殊类型 ⊥。
否定 (τ)⊥ 是按结构定义的对合，不是构造子（X⊥ 除外）。
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union


@dataclass(frozen=True)
class MType:
    def __str__(self) -> str:
        from .printer import show_mtype

        return show_mtype(self)


@dataclass(frozen=True)
class MVar(MType):
    name: str


@dataclass(frozen=True)
class MNeg(MType):
    """X⊥"""

    name: str


@dataclass(frozen=True)
class Prod(MType):
    left: MType
    right: MType


@dataclass(frozen=True)
class Sum(MType):
    left: MType
    right: MType


@dataclass(frozen=True)
class MQuantified(MType):
    binder: str
    body: MType


@dataclass(frozen=True)
class ForallT(MQuantified):
    pass


@dataclass(frozen=True)
class ExistsT(MQuantified):
    pass


@dataclass(frozen=True)
class Bottom:
    """t*u 的判断类型 ⊥"""

    def __str__(self) -> str:
        return "⊥"


BOTTOM = Bottom()

SLType = Union[MType, Bottom]


def neg(t: MType) -> MType:
    """(X)⊥ = X⊥，(X⊥)⊥ = X，(τ×σ)⊥ = τ⊥+σ⊥，(∀X.τ)⊥ = ∃X.τ⊥，其余对偶"""
    match t:
        case MVar(name):
            return MNeg(name)
        case MNeg(name):
            return MVar(name)
        case Prod(left, right):
            return Sum(neg(left), neg(right))
        case Sum(left, right):
            return Prod(neg(left), neg(right))
        case ForallT(binder, body):
            return ExistsT(binder, neg(body))
        case ExistsT(binder, body):
            return ForallT(binder, neg(body))
    raise TypeError(f"未知 m-类型: {t!r}")


def mfree_vars(t: MType) -> frozenset[str]:
    match t:
        case MVar(name) | MNeg(name):
            return frozenset((name,))
        case Prod(left, right) | Sum(left, right):
            return mfree_vars(left) | mfree_vars(right)
        case MQuantified(binder=binder, body=body):
            return mfree_vars(body) - {binder}
    return frozenset()


def _all_names(t: MType) -> set[str]:
    match t:
        case MVar(name) | MNeg(name):
            return {name}
        case Prod(left, right) | Sum(left, right):
            return _all_names(left) | _all_names(right)
        case MQuantified(binder=binder, body=body):
            return _all_names(body) | {binder}
    return set()


def msubst(t: MType, s: MType, x: str) -> MType:
    """τ[σ/X]；X⊥ 被替换为 σ⊥"""
    if x not in mfree_vars(t):
        return t
    match t:
        case MVar(name):
            return s if name == x else t
        case MNeg(name):
            return neg(s) if name == x else t
        case Prod(left, right):
            return Prod(msubst(left, s, x), msubst(right, s, x))
        case Sum(left, right):
            return Sum(msubst(left, s, x), msubst(right, s, x))
        case MQuantified(binder=binder, body=body):
            if binder in mfree_vars(s):
                avoid = _all_names(body) | mfree_vars(s) | {x}
                counter = 1
                stem = binder.rstrip("0123456789") or "Y"
                while f"{stem}{counter}" in avoid:
                    counter += 1
                fresh = f"{stem}{counter}"
                body = msubst(body, MVar(fresh), binder)
                binder = fresh
            return type(t)(binder, msubst(body, s, x))
    raise TypeError(f"未知 m-类型: {t!r}")


def _key(t: MType, env: dict[str, int], depth: int) -> tuple:
    match t:
        case MVar(name):
            return ("v", env.get(name, name))
        case MNeg(name):
            return ("n", env.get(name, name))
        case Prod(left, right):
            return ("*", _key(left, env, depth), _key(right, env, depth))
        case Sum(left, right):
            return ("+", _key(left, env, depth), _key(right, env, depth))
        case MQuantified(binder=binder, body=body):
            inner = dict(env)
            inner[binder] = depth
            return (type(t).__name__, _key(body, inner, depth + 1))
    raise TypeError(f"未知 m-类型: {t!r}")


def mtype_key(t: MType) -> tuple:
    return _key(t, {}, 0)


def mtype_eq(a: SLType, b: SLType) -> bool:
    """alpha 等价"""
    if isinstance(a, Bottom) or isinstance(b, Bottom):
        return isinstance(a, Bottom) and isinstance(b, Bottom)
    return mtype_key(a) == mtype_key(b)

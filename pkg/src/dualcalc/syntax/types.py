"""
类型语言

类型变量、∧、∨、¬、μ、ν（DCμν）与 ∀、∃（DC2）共用一棵语法树；
各演算系统允许的构造子在 well_formed 中检查，而不是在构造时。
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Callable, Iterator, Union


class System(str, Enum):
    """演算系统"""

    DC = "dc"
    DCMUNU = "dcmunu"
    DC2 = "dc2"


@dataclass(frozen=True)
class TypeExpr:
    """类型基类"""

    def __str__(self) -> str:
        from .printer import show_type

        return show_type(self)


@dataclass(frozen=True)
class TyVar(TypeExpr):
    name: str


@dataclass(frozen=True)
class And(TypeExpr):
    left: TypeExpr
    right: TypeExpr


@dataclass(frozen=True)
class Or(TypeExpr):
    left: TypeExpr
    right: TypeExpr


@dataclass(frozen=True)
class Not(TypeExpr):
    body: TypeExpr


@dataclass(frozen=True)
class Quantified(TypeExpr):
    """带绑定变量的类型：μ、ν、∀、∃"""

    binder: str
    body: TypeExpr


@dataclass(frozen=True)
class Mu(Quantified):
    pass


@dataclass(frozen=True)
class Nu(Quantified):
    pass


@dataclass(frozen=True)
class Forall(Quantified):
    pass


@dataclass(frozen=True)
class Exists(Quantified):
    pass


@dataclass(frozen=True)
class Meta(TypeExpr):
    """类型元变量，仅在类型检查器内部出现"""

    ident: int


BINDER_KEYWORDS: dict[type, str] = {Mu: "mu", Nu: "nu", Forall: "forall", Exists: "exists"}

# 各系统不允许的类型构造子
_FORBIDDEN_TYPES: dict[System, tuple[type, ...]] = {
    System.DC: (Mu, Nu, Forall, Exists),
    System.DCMUNU: (Forall, Exists),
    System.DC2: (Mu, Nu),
}


def forbidden_type_constructors(system: System) -> tuple[type, ...]:
    return _FORBIDDEN_TYPES[system]


def implies(a: TypeExpr, b: TypeExpr) -> TypeExpr:
    """A ⊃ B 即 ¬A ∨ B"""
    return Or(Not(a), b)


def type_children(t: TypeExpr) -> tuple[TypeExpr, ...]:
    if isinstance(t, (And, Or)):
        return (t.left, t.right)
    if isinstance(t, Not):
        return (t.body,)
    if isinstance(t, Quantified):
        return (t.body,)
    return ()


def iter_subtypes(t: TypeExpr) -> Iterator[TypeExpr]:
    yield t
    for child in type_children(t):
        yield from iter_subtypes(child)


def free_type_vars(t: TypeExpr) -> frozenset[str]:
    match t:
        case TyVar(name):
            return frozenset((name,))
        case And(left, right) | Or(left, right):
            return free_type_vars(left) | free_type_vars(right)
        case Not(body):
            return free_type_vars(body)
        case Quantified(binder=binder, body=body):
            return free_type_vars(body) - {binder}
    return frozenset()


def all_type_names(t: TypeExpr) -> frozenset[str]:
    """所有出现的类型变量名，含绑定变量"""
    names: set[str] = set()
    for sub in iter_subtypes(t):
        if isinstance(sub, TyVar):
            names.add(sub.name)
        elif isinstance(sub, Quantified):
            names.add(sub.binder)
    return frozenset(names)


def fresh_type_name(hint: str, avoid: frozenset[str] | set[str]) -> str:
    stem = hint.rstrip("0123456789") or "Y"
    counter = 1
    while f"{stem}{counter}" in avoid:
        counter += 1
    return f"{stem}{counter}"


def subst_type(a: TypeExpr, b: TypeExpr, x: str) -> TypeExpr:
    """A[B/X]，避免捕获（必要时重命名绑定变量）"""
    if x not in free_type_vars(a):
        return a
    return _subst(a, b, x, free_type_vars(b))


def _subst(a: TypeExpr, b: TypeExpr, x: str, fv_b: frozenset[str]) -> TypeExpr:
    match a:
        case TyVar(name):
            return b if name == x else a
        case And(left, right):
            return And(_subst(left, b, x, fv_b), _subst(right, b, x, fv_b))
        case Or(left, right):
            return Or(_subst(left, b, x, fv_b), _subst(right, b, x, fv_b))
        case Not(body):
            return Not(_subst(body, b, x, fv_b))
        case Quantified(binder=binder, body=body):
            if binder == x or x not in free_type_vars(body):
                return a
            if binder in fv_b:
                renamed = fresh_type_name(binder, fv_b | all_type_names(body) | {x})
                body = _subst(body, TyVar(renamed), binder, frozenset((renamed,)))
                binder = renamed
            return type(a)(binder, _subst(body, b, x, fv_b))
    return a


def map_type_vars(t: TypeExpr, fn: Callable[[str], TypeExpr]) -> TypeExpr:
    """对自由类型变量做同时替换（fn 的结果不得含被绑定的名字）"""
    match t:
        case TyVar(name):
            return fn(name)
        case And(left, right):
            return And(map_type_vars(left, fn), map_type_vars(right, fn))
        case Or(left, right):
            return Or(map_type_vars(left, fn), map_type_vars(right, fn))
        case Not(body):
            return Not(map_type_vars(body, fn))
        case Quantified(binder=binder, body=body):
            inner = map_type_vars(body, lambda n: TyVar(n) if n == binder else fn(n))
            return type(t)(binder, inner)
    return t


TypeKey = Union[tuple, str]


def type_key(t: TypeExpr) -> TypeKey:
    """de Bruijn 形式的键：alpha 等价的类型键相同"""
    return _type_key(t, {}, 0)


def _type_key(t: TypeExpr, env: dict[str, int], depth: int) -> TypeKey:
    match t:
        case TyVar(name):
            if name in env:
                return ("b", depth - env[name])
            return ("f", name)
        case And(left, right):
            return ("and", _type_key(left, env, depth), _type_key(right, env, depth))
        case Or(left, right):
            return ("or", _type_key(left, env, depth), _type_key(right, env, depth))
        case Not(body):
            return ("not", _type_key(body, env, depth))
        case Quantified(binder=binder, body=body):
            inner = dict(env)
            inner[binder] = depth + 1
            return (BINDER_KEYWORDS[type(t)], _type_key(body, inner, depth + 1))
        case Meta(ident):
            return ("meta", ident)
    raise TypeError(f"未知类型节点: {t!r}")


def type_alpha_eq(a: TypeExpr, b: TypeExpr) -> bool:
    return a == b or type_key(a) == type_key(b)


# ---------------------------------------------------------------------------
# Pos / Neg
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class NameSet:
    """
    类型变量集合：有限集，或“全体减去有限集”

    Args:
        names: 有限部分
        cofinite: 为 True 时表示 全体 ∖ names
    """

    names: frozenset[str] = frozenset()
    cofinite: bool = False

    @classmethod
    def everything(cls) -> "NameSet":
        return cls(frozenset(), True)

    @classmethod
    def all_except(cls, *names: str) -> "NameSet":
        return cls(frozenset(names), True)

    def __contains__(self, name: object) -> bool:
        return (name not in self.names) if self.cofinite else (name in self.names)

    def __and__(self, other: "NameSet") -> "NameSet":
        if self.cofinite and other.cofinite:
            return NameSet(self.names | other.names, True)
        if self.cofinite:
            return NameSet(other.names - self.names, False)
        if other.cofinite:
            return NameSet(self.names - other.names, False)
        return NameSet(self.names & other.names, False)

    def with_name(self, name: str) -> "NameSet":
        if self.cofinite:
            return NameSet(self.names - {name}, True)
        return NameSet(self.names | {name}, False)

    def __str__(self) -> str:
        inner = ", ".join(sorted(self.names))
        return f"全体∖{{{inner}}}" if self.cofinite else f"{{{inner}}}"


def pos_neg(a: TypeExpr) -> tuple[NameSet, NameSet]:
    """按定义计算 (Pos(A), Neg(A))"""
    match a:
        case TyVar(name):
            return NameSet.everything(), NameSet.all_except(name)
        case And(left, right) | Or(left, right):
            lp, ln = pos_neg(left)
            rp, rn = pos_neg(right)
            return lp & rp, ln & rn
        case Not(body):
            p, n = pos_neg(body)
            return n, p
        case Quantified(binder=binder, body=body):
            p, n = pos_neg(body)
            return p.with_name(binder), n.with_name(binder)
    return NameSet.everything(), NameSet.everything()


def well_formed(a: TypeExpr, system: System = System.DCMUNU) -> None:
    """
    检查类型在给定系统中合法

    Raises:
        ForbiddenConstructor: 出现系统不允许的构造子
        NegativeOccurrence: μ/ν 的绑定变量不在 Pos(体) 中
    """
    from ..errors import ForbiddenConstructor, NegativeOccurrence

    forbidden = forbidden_type_constructors(system)
    stack: list[tuple[TypeExpr, tuple[int, ...]]] = [(a, ())]
    while stack:
        t, path = stack.pop()
        if isinstance(t, forbidden):
            raise ForbiddenConstructor(system, BINDER_KEYWORDS[type(t)])
        if isinstance(t, (Mu, Nu)) and t.binder not in pos_neg(t.body)[0]:
            raise NegativeOccurrence(t.binder, path)
        for index, child in enumerate(type_children(t)):
            stack.append((child, path + (index,)))


def is_well_formed(a: TypeExpr, system: System = System.DCMUNU) -> bool:
    from ..errors import IllFormedType

    try:
        well_formed(a, system)
    except IllFormedType:
        return False
    return True

"""
Sλ2 的项：t ::= x | inj1(t) | inj2(t) | ⟨t,t⟩ | t*t | λx.t | a(t) | e(t)

可选注解只供类型检查：λ 的绑定变量类型、t*u 左侧的类型、a(t) 的特征变量、e(t) 的实例类型。
"""

from __future__ import annotations

import re
from dataclasses import dataclass, replace
from typing import Iterator, Optional

from .types import MType


@dataclass(frozen=True)
class SLTerm:
    def __str__(self) -> str:
        from .printer import show_sl

        return show_sl(self)


@dataclass(frozen=True)
class SVar(SLTerm):
    name: str


@dataclass(frozen=True)
class Inj1(SLTerm):
    body: SLTerm


@dataclass(frozen=True)
class Inj2(SLTerm):
    body: SLTerm


@dataclass(frozen=True)
class SPair(SLTerm):
    left: SLTerm
    right: SLTerm


@dataclass(frozen=True)
class App(SLTerm):
    """t * u；ann 为 t 的类型"""

    left: SLTerm
    right: SLTerm
    ann: Optional[MType] = None


@dataclass(frozen=True)
class Lam(SLTerm):
    binder: str
    body: SLTerm
    ann: Optional[MType] = None


@dataclass(frozen=True)
class TAbs(SLTerm):
    """a(t)"""

    body: SLTerm
    eigen: Optional[str] = None


@dataclass(frozen=True)
class TPack(SLTerm):
    """e(t)"""

    body: SLTerm
    witness: Optional[MType] = None


_FIELDS: dict[type, tuple[str, ...]] = {
    SVar: (),
    Inj1: ("body",),
    Inj2: ("body",),
    SPair: ("left", "right"),
    App: ("left", "right"),
    Lam: ("body",),
    TAbs: ("body",),
    TPack: ("body",),
}


def sl_children(t: SLTerm) -> tuple[SLTerm, ...]:
    return tuple(getattr(t, f) for f in _FIELDS[type(t)])


def sl_rebuild(t: SLTerm, kids: tuple[SLTerm, ...] | list[SLTerm]) -> SLTerm:
    fields = _FIELDS[type(t)]
    if all(getattr(t, f) is k for f, k in zip(fields, kids)):
        return t
    return replace(t, **dict(zip(fields, kids)))


def sl_positions(t: SLTerm) -> Iterator[tuple[tuple[int, ...], SLTerm]]:
    stack: list[tuple[tuple[int, ...], SLTerm]] = [((), t)]
    while stack:
        path, node = stack.pop()
        yield path, node
        kids = sl_children(node)
        for i in range(len(kids) - 1, -1, -1):
            stack.append((path + (i,), kids[i]))


def sl_subterm_at(t: SLTerm, path: tuple[int, ...]) -> SLTerm:
    for i in path:
        t = sl_children(t)[i]
    return t


def sl_replace_at(t: SLTerm, path: tuple[int, ...], new: SLTerm) -> SLTerm:
    if not path:
        return new
    kids = list(sl_children(t))
    kids[path[0]] = sl_replace_at(kids[path[0]], path[1:], new)
    return sl_rebuild(t, kids)


def sl_free_vars(t: SLTerm) -> frozenset[str]:
    match t:
        case SVar(name):
            return frozenset((name,))
        case Lam(binder, body):
            return sl_free_vars(body) - {binder}
    result: frozenset[str] = frozenset()
    for kid in sl_children(t):
        result |= sl_free_vars(kid)
    return result


def sl_all_vars(t: SLTerm) -> set[str]:
    names: set[str] = set()
    for _, node in sl_positions(t):
        if isinstance(node, SVar):
            names.add(node.name)
        elif isinstance(node, Lam):
            names.add(node.binder)
    return names


_DIGITS = re.compile(r"\d+$")


def fresh_sl_name(hint: str, avoid: set[str] | frozenset[str]) -> str:
    stem = _DIGITS.sub("", hint) or "v"
    counter = 1
    while f"{stem}{counter}" in avoid:
        counter += 1
    return f"{stem}{counter}"


def sl_subst(t: SLTerm, u: SLTerm, x: str) -> SLTerm:
    """t[u/x]，避免捕获"""
    fv_u = sl_free_vars(u)
    return _subst(t, u, x, fv_u)


def _subst(t: SLTerm, u: SLTerm, x: str, fv_u: frozenset[str]) -> SLTerm:
    if x not in sl_free_vars(t):
        return t
    match t:
        case SVar(name):
            return u if name == x else t
        case Lam(binder, body, ann):
            if binder in fv_u:
                fresh = fresh_sl_name(binder, sl_all_vars(body) | fv_u | {x})
                body = _subst(body, SVar(fresh), binder, frozenset((fresh,)))
                binder = fresh
            return Lam(binder, _subst(body, u, x, fv_u), ann)
    return sl_rebuild(t, [_subst(k, u, x, fv_u) for k in sl_children(t)])


def _key(t: SLTerm, env: dict[str, int], depth: int) -> tuple:
    match t:
        case SVar(name):
            return ("v", env.get(name, name))
        case Lam(binder, body):
            inner = dict(env)
            inner[binder] = depth
            return ("λ", _key(body, inner, depth + 1))
    return (type(t).__name__,) + tuple(_key(k, env, depth) for k in sl_children(t))


def sl_alpha_key(t: SLTerm) -> tuple:
    """忽略注解的 alpha 等价键"""
    return _key(t, {}, 0)


def sl_alpha_eq(a: SLTerm, b: SLTerm) -> bool:
    return sl_alpha_key(a) == sl_alpha_key(b)


def sl_size(t: SLTerm) -> int:
    return sum(1 for _ in sl_positions(t))

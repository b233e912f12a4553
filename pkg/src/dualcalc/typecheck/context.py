"""上下文 Γ / Δ 与判断"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable, Iterable, Iterator, Mapping, Optional, Union

from ..errors import JudgmentError
from ..syntax.names import Name
from ..syntax.terms import Expr, Sort
from ..syntax.types import System, TypeExpr


class Context(Mapping[Name, TypeExpr]):
    """
    不可变的名字 -> 类型映射

    上下文是声明的集合：同一名字只对应一个类型，扩展时覆盖旧声明。
    """

    __slots__ = ("_entries", "_hash")

    def __init__(
        self, entries: Union[Mapping[Name, TypeExpr], Iterable[tuple[Name, TypeExpr]]] = ()
    ):
        self._entries: dict[Name, TypeExpr] = dict(entries)
        self._hash: Optional[int] = None

    def __getitem__(self, name: Name) -> TypeExpr:
        return self._entries[name]

    def __iter__(self) -> Iterator[Name]:
        return iter(self._entries)

    def __len__(self) -> int:
        return len(self._entries)

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._entries.items()))
        return self._hash

    def __eq__(self, other: object) -> bool:
        if isinstance(other, Context):
            return self._entries == other._entries
        return NotImplemented

    def __repr__(self) -> str:
        inner = ", ".join(f"{k}: {v}" for k, v in self._entries.items())
        return f"Context({inner})"

    def extend(self, name: Name, ty: TypeExpr) -> "Context":
        entries = dict(self._entries)
        entries[name] = ty
        return Context(entries)

    def update(self, other: Mapping[Name, TypeExpr]) -> "Context":
        entries = dict(self._entries)
        entries.update(other)
        return Context(entries)

    def map_types(self, fn: Callable[[TypeExpr], TypeExpr]) -> "Context":
        return Context({k: fn(v) for k, v in self._entries.items()})


@dataclass(frozen=True)
class Judgment:
    """
    判断 Γ ⊢ Δ | M:A、K:A | Γ ⊢ Δ 或 Γ | S ⊢ Δ

    Args:
        gamma: 变量上下文
        delta: 余变量上下文
        principal: 主表达式
        type: 主表达式的类型（语句判断为 None）
        system: 所属演算系统
    """

    gamma: Context
    delta: Context
    principal: Expr
    type: Optional[TypeExpr] = None
    system: System = field(default=System.DCMUNU)

    def __post_init__(self):
        if not all(name.is_variable for name in self.gamma):
            raise JudgmentError("Γ 中只能声明变量")
        if not all(name.is_covariable for name in self.delta):
            raise JudgmentError("Δ 中只能声明余变量")
        if self.principal.sort is Sort.STATEMENT:
            if self.type is not None:
                raise JudgmentError("语句判断不带类型")
        elif self.type is None:
            raise JudgmentError("项/余项判断必须给出类型")

    @property
    def shape(self) -> str:
        return {Sort.TERM: "right", Sort.COTERM: "left", Sort.STATEMENT: "center"}[
            self.principal.sort
        ]

    def with_principal(self, principal: Expr) -> "Judgment":
        return Judgment(self.gamma, self.delta, principal, self.type, self.system)

    def __str__(self) -> str:
        from ..syntax.printer import show_judgment

        return show_judgment(self)


def judgment(
    principal: Expr,
    type: Optional[TypeExpr] = None,
    gamma: Union[Mapping[Name, TypeExpr], Iterable[tuple[Name, TypeExpr]]] = (),
    delta: Union[Mapping[Name, TypeExpr], Iterable[tuple[Name, TypeExpr]]] = (),
    system: System = System.DCMUNU,
) -> Judgment:
    """便捷构造判断"""
    return Judgment(Context(gamma), Context(delta), principal, type, system)

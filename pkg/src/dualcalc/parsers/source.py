"""
源文件（.dc）：按名字引用的定义与宏展开

类型定义以大写名字引用，项定义以变量、余项定义以余变量的形式引用；
展开是避免捕获的替换。引用可以指向文件中任意位置的定义，但不能成环。
"""

from __future__ import annotations

from pathlib import Path
from typing import Iterable, Iterator, Optional, Sequence

from ..errors import DefinitionError
from ..syntax.names import Name
from ..syntax.terms import Expr
from ..syntax.traversal import annotations, free_names, subst_type_in_expr, substitute
from ..syntax.types import System, TypeExpr, free_type_vars, subst_type
from ..typecheck.context import Judgment
from .dc_parser import Declarations, Definition, DefinitionKind, make_judgment, parse_definitions

PRELUDE_PATH = Path(__file__).resolve().parent.parent / "stdlib" / "prelude.dc"


class SourceFile:
    """
    一组有序定义

    Args:
        definitions: 解析得到的定义
        path: 来源文件路径（仅用于信息）
    """

    def __init__(self, definitions: Sequence[Definition], path: Optional[str] = None):
        self.path = path
        self.definitions: dict[str, Definition] = {}
        for definition in definitions:
            if definition.name in self.definitions:
                where = f"（第 {definition.line} 行）" if definition.line else ""
                raise DefinitionError(f"重复定义: {definition.name}{where}")
            self.definitions[definition.name] = definition
        self._refs: dict[Name, str] = {
            d.ref: d.name for d in self.definitions.values() if d.ref is not None
        }
        self._types: dict[str, TypeExpr] = {}
        self._exprs: dict[str, Expr] = {}

    @classmethod
    def from_text(cls, text: str, path: Optional[str] = None) -> "SourceFile":
        return cls(parse_definitions(text), path)

    @classmethod
    def from_file(cls, file_path: str) -> "SourceFile":
        path = Path(file_path)
        if not path.exists():
            raise FileNotFoundError(f"源文件不存在: {file_path}")
        return cls.from_text(path.read_text(encoding="utf-8"), str(path))

    def merged(self, other: "SourceFile") -> "SourceFile":
        """两个文件的定义合在一起（重名报错）"""
        return SourceFile(list(self) + list(other), other.path or self.path)

    def __iter__(self) -> Iterator[Definition]:
        return iter(self.definitions.values())

    def __len__(self) -> int:
        return len(self.definitions)

    def __contains__(self, name: object) -> bool:
        return name in self.definitions

    def definition(self, name: str) -> Definition:
        try:
            return self.definitions[name]
        except KeyError:
            known = ", ".join(self.definitions) or "无"
            raise DefinitionError(f"未知的定义: {name}（已有: {known}）") from None

    # ------------------------------------------------------------------ 类型

    def _type_definition(self, name: str, visiting: tuple[str, ...]) -> TypeExpr:
        if name in self._types:
            return self._types[name]
        if name in visiting:
            cycle = " -> ".join(visiting[visiting.index(name) :] + (name,))
            raise DefinitionError(f"类型定义循环引用: {cycle}")
        body = self.definitions[name].body
        self._types[name] = self._expand_type(body, visiting + (name,))
        return self._types[name]

    def _type_refs(self, names: Iterable[str]) -> list[str]:
        return [
            n
            for n in sorted(names)
            if n in self.definitions and self.definitions[n].kind is DefinitionKind.TYPE
        ]

    def _expand_type(self, t: TypeExpr, visiting: tuple[str, ...]) -> TypeExpr:
        for name in self._type_refs(free_type_vars(t)):
            t = subst_type(t, self._type_definition(name, visiting), name)
        return t

    def expand_type(self, t: TypeExpr) -> TypeExpr:
        """展开类型中对类型定义的引用"""
        return self._expand_type(t, ())

    def _expand_annotations(self, e: Expr, visiting: tuple[str, ...]) -> Expr:
        names: set[str] = set()
        for ann in annotations(e):
            names |= free_type_vars(ann)
        for name in self._type_refs(names):
            e = subst_type_in_expr(e, self._type_definition(name, visiting), name)
        return e

    # ------------------------------------------------------------------ 表达式

    def _expr_definition(self, name: str, visiting: tuple[str, ...]) -> Expr:
        if name in self._exprs:
            return self._exprs[name]
        if name in visiting:
            cycle = " -> ".join(visiting[visiting.index(name) :] + (name,))
            raise DefinitionError(f"定义循环引用: {cycle}")
        definition = self.definitions[name]
        bound = {n for n, _ in definition.gamma} | {n for n, _ in definition.delta}
        self._exprs[name] = self._expand(definition.body, bound, visiting + (name,))
        return self._exprs[name]

    def _expand(self, e: Expr, bound: set[Name], visiting: tuple[str, ...]) -> Expr:
        e = self._expand_annotations(e, ())
        mapping: dict[Name, Expr] = {}
        for ref in sorted(free_names(e) - bound, key=str):
            target = self._refs.get(ref)
            if target is not None:
                mapping[ref] = self._expr_definition(target, visiting)
        return substitute(e, mapping) if mapping else e

    def expand(self, e: Expr, bound: Iterable[Name] = ()) -> Expr:
        """
        展开表达式中对定义的引用

        Args:
            e: 表达式
            bound: 不视为引用的名字（例如判断上下文中声明的名字）
        """
        return self._expand(e, set(bound), ())

    def _declarations(self, decls: Declarations) -> list[tuple[Name, TypeExpr]]:
        return [(n, self.expand_type(t)) for n, t in decls]

    def expand_judgment(self, j: Judgment) -> Judgment:
        """展开判断中的类型与表达式引用；上下文中声明的名字不展开"""
        bound = set(j.gamma) | set(j.delta)
        principal = self.expand(j.principal, bound)
        ty = self.expand_type(j.type) if j.type is not None else None
        gamma = self._declarations(tuple(j.gamma.items()))
        delta = self._declarations(tuple(j.delta.items()))
        return make_judgment(gamma, delta, principal, ty)

    # ------------------------------------------------------------------ 判断

    def judgment(self, name: str, system: Optional[System] = None) -> Judgment:
        """定义声明的判断（已展开）"""
        definition = self.definition(name)
        if definition.kind is DefinitionKind.TYPE:
            raise DefinitionError(f"{name} 是类型定义，没有判断")
        principal = self._expr_definition(name, ())
        ty = self.expand_type(definition.type) if definition.type is not None else None
        return make_judgment(
            self._declarations(definition.gamma),
            self._declarations(definition.delta),
            principal,
            ty,
            system,
        )

    def judgments(self) -> dict[str, Judgment]:
        return {d.name: self.judgment(d.name) for d in self if d.kind is not DefinitionKind.TYPE}

    def types(self) -> dict[str, TypeExpr]:
        return {
            d.name: self._type_definition(d.name, ())
            for d in self
            if d.kind is DefinitionKind.TYPE
        }


def load_source(file_path: str) -> SourceFile:
    return SourceFile.from_file(file_path)


def load_prelude() -> SourceFile:
    """标准前奏（stdlib/prelude.dc）"""
    return SourceFile.from_file(str(PRELUDE_PATH))

"""
DC / DCμν / DC2 具体语法解析器

语法与 syntax.printer 的输出一致：parse(print(x)) 与 x α-等价。
判断所属的演算系统按内容推断：出现 ∀/∃ 或 DC2 构造子即为 DC2，否则为 DCμν。
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Optional

from lark import Token, Transformer, v_args

from ..errors import DualCalcSyntaxError, JudgmentError
from ..syntax.names import Name, covar, var
from ..syntax.terms import (
    DC2_CONSTRUCTORS,
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
    Sort,
    TyAbs,
    TyInst,
    TyPack,
    TyUnpack,
    Var,
)
from ..syntax.traversal import annotations, positions
from ..syntax.types import (
    And,
    Exists,
    Forall,
    Mu,
    Not,
    Nu,
    Or,
    System,
    TypeExpr,
    TyVar,
    implies,
    iter_subtypes,
)
from ..typecheck.context import Context, Judgment
from .base import BaseParser

Declarations = tuple[tuple[Name, TypeExpr], ...]


class DefinitionKind(str, Enum):
    TYPE = "type"
    TERM = "term"
    COTERM = "coterm"
    STATEMENT = "stmt"


@dataclass(frozen=True)
class Definition:
    """
    源文件中的一条定义（尚未展开）

    Args:
        kind: 定义种类
        name: 定义名（余项定义带前导 '）
        body: 类型定义的类型，或项/余项/语句
        type: 项与余项的声明类型
        gamma: 声明的变量上下文
        delta: 声明的余变量上下文
        line: 定义所在行
    """

    kind: DefinitionKind
    name: str
    body: TypeExpr | Expr
    type: Optional[TypeExpr] = None
    gamma: Declarations = ()
    delta: Declarations = ()
    line: Optional[int] = None

    @property
    def ref(self) -> Optional[Name]:
        """项定义以变量、余项定义以余变量的形式被引用"""
        if self.kind is DefinitionKind.TERM:
            return var(self.name)
        if self.kind is DefinitionKind.COTERM:
            return covar(self.name.lstrip("'"))
        return None


def build_context(decls: Iterable[tuple[Name, TypeExpr]]) -> Context:
    """声明列表 -> 上下文；同一名字声明两个不同类型时报错"""
    entries: dict[Name, TypeExpr] = {}
    for name, ty in decls:
        if name in entries and entries[name] != ty:
            raise JudgmentError(f"名字 {name} 被声明了两个不同的类型: {entries[name]} 与 {ty}")
        entries[name] = ty
    return Context(entries)


def infer_system(principal: Expr, types: Iterable[Optional[TypeExpr]] = ()) -> System:
    """出现 ∀/∃ 或 DC2 构造子时为 DC2，否则为 DCμν"""
    all_types = [t for t in types if t is not None] + list(annotations(principal))
    for t in all_types:
        if any(isinstance(sub, (Forall, Exists)) for sub in iter_subtypes(t)):
            return System.DC2
    if any(isinstance(node, DC2_CONSTRUCTORS) for _, node in positions(principal)):
        return System.DC2
    return System.DCMUNU


def make_judgment(
    gamma: Iterable[tuple[Name, TypeExpr]],
    delta: Iterable[tuple[Name, TypeExpr]],
    principal: Expr,
    ty: Optional[TypeExpr],
    system: Optional[System] = None,
) -> Judgment:
    gamma_ctx, delta_ctx = build_context(gamma), build_context(delta)
    if system is None:
        types = [ty, *gamma_ctx.values(), *delta_ctx.values()]
        system = infer_system(principal, types)
    return Judgment(gamma_ctx, delta_ctx, principal, ty, system)


class DCTransformer(Transformer):
    """语法树 -> 类型、表达式、判断与定义"""

    # ---- 记号
    def VAR(self, token: Token) -> Name:  # noqa: N802
        return var(str(token))

    def COVAR(self, token: Token) -> Name:  # noqa: N802
        return covar(str(token)[1:])

    def TYVAR(self, token: Token) -> str:  # noqa: N802
        return str(token)

    # ---- 入口
    def type_entry(self, args):
        return args[0]

    def expr_entry(self, args):
        return args[0]

    def judgment_entry(self, args):
        return args[0]

    def source_entry(self, args):
        return list(args)

    # ---- 类型
    def mu_type(self, args):
        return Mu(*args)

    def nu_type(self, args):
        return Nu(*args)

    def forall_type(self, args):
        return Forall(*args)

    def exists_type(self, args):
        return Exists(*args)

    def implies_type(self, args):
        return implies(*args)

    def or_type(self, args):
        return Or(*args)

    def and_type(self, args):
        return And(*args)

    def not_type(self, args):
        return Not(args[0])

    def type_var(self, args):
        return TyVar(args[0])

    def annotation(self, args):
        return args[0]

    def eigen(self, args):
        return args[0]

    # ---- 语句
    def cut(self, args):
        term, coterm = args
        return Cut(term, coterm)

    def annotated_cut(self, args):
        term, ty, coterm = args
        return Cut(term, coterm, ty)

    # ---- 项
    def var(self, args):
        return Var(args[0])

    def pair(self, args):
        return Pair(*args)

    def inl(self, args):
        return Inl(*args)

    def inr(self, args):
        return Inr(*args)

    def ty_abs(self, args):
        return TyAbs(*args)

    def ty_pack(self, args):
        return TyPack(*args)

    def not_intro(self, args):
        return NotIntro(args[0])

    def bind_co(self, args):
        return BindCo(*args)

    def fold(self, args):
        return In(*args)

    def coitr(self, args):
        return Coitr(*args)

    # ---- 余项
    def covar(self, args):
        return Covar(args[0])

    def case(self, args):
        return Case(*args)

    def fst(self, args):
        ann, body = args
        return Fst(body, ann)

    def snd(self, args):
        ann, body = args
        return Snd(body, ann)

    def not_elim(self, args):
        return NotElim(args[0])

    def bind_var(self, args):
        return BindVar(*args)

    def unfold(self, args):
        return Out(*args)

    def itr(self, args):
        return Itr(*args)

    def ty_inst(self, args):
        witness, body = args
        return TyInst(body, witness)

    def ty_unpack(self, args):
        eigen, body = args
        return TyUnpack(body, eigen)

    # ---- 判断
    def gamma(self, args):
        return tuple(args)

    def delta(self, args):
        return tuple(args)

    def var_decl(self, args):
        return (args[0], args[1])

    def covar_decl(self, args):
        return (args[0], args[1])

    def right_judgment(self, args):
        gamma, delta, term, ty = args
        return make_judgment(gamma, delta, term, ty)

    def left_judgment(self, args):
        coterm, ty, gamma, delta = args
        return make_judgment(gamma, delta, coterm, ty)

    def center_judgment(self, args):
        gamma, statement, delta = args
        return make_judgment(gamma, delta, statement, None)

    # ---- 定义
    def contexts(self, args):
        return (args[0], args[1])

    @v_args(meta=True)
    def type_def(self, meta, args):
        name, body = args
        return Definition(DefinitionKind.TYPE, name, body, line=_line(meta))

    @v_args(meta=True)
    def term_def(self, meta, args):
        name, contexts, ty, body = args
        gamma, delta = contexts or ((), ())
        return Definition(DefinitionKind.TERM, name.base, body, ty, gamma, delta, _line(meta))

    @v_args(meta=True)
    def coterm_def(self, meta, args):
        name, contexts, ty, body = args
        gamma, delta = contexts or ((), ())
        return Definition(DefinitionKind.COTERM, str(name), body, ty, gamma, delta, _line(meta))

    @v_args(meta=True)
    def stmt_def(self, meta, args):
        name, contexts, body = args
        gamma, delta = contexts or ((), ())
        kind = DefinitionKind.STATEMENT
        return Definition(kind, name.base, body, None, gamma, delta, _line(meta))


def _line(meta) -> Optional[int]:
    return getattr(meta, "line", None)


_SORT_NAMES = {Sort.TERM: "项", Sort.COTERM: "余项", Sort.STATEMENT: "语句"}


class DCParser(BaseParser):
    """对偶演算的解析器"""

    grammar_file = "dc.lark"
    starts = ("type_entry", "expr_entry", "judgment_entry", "source_entry")

    def __init__(self):
        super().__init__("对偶演算")
        self.transformer = DCTransformer()

    def parse(self, text: str) -> Expr:
        return self.parse_expr(text)

    def parse_type(self, text: str) -> TypeExpr:
        return self._run(text, "type_entry", self.transformer)

    def parse_expr(self, text: str, sort: Optional[Sort] = None) -> Expr:
        """解析表达式；给出 sort 时检查表达式的种类"""
        expr = self._run(text, "expr_entry", self.transformer)
        if sort is not None and expr.sort is not sort:
            raise DualCalcSyntaxError(
                f"期望{_SORT_NAMES[sort]}，得到{_SORT_NAMES[expr.sort]}: {text.strip()}"
            )
        return expr

    def parse_judgment(self, text: str, system: Optional[System] = None) -> Judgment:
        judgment = self._run(text, "judgment_entry", self.transformer)
        if system is not None and system is not judgment.system:
            judgment = Judgment(
                judgment.gamma, judgment.delta, judgment.principal, judgment.type, system
            )
        return judgment

    def parse_definitions(self, text: str) -> list[Definition]:
        return self._run(text, "source_entry", self.transformer)


_DEFAULT = DCParser()


def parse_type(text: str) -> TypeExpr:
    return _DEFAULT.parse_type(text)


def parse_expr(text: str) -> Expr:
    return _DEFAULT.parse_expr(text)


def parse_term(text: str) -> Expr:
    return _DEFAULT.parse_expr(text, Sort.TERM)


def parse_coterm(text: str) -> Expr:
    return _DEFAULT.parse_expr(text, Sort.COTERM)


def parse_statement(text: str) -> Expr:
    return _DEFAULT.parse_expr(text, Sort.STATEMENT)


def parse_judgment(text: str, system: Optional[System] = None) -> Judgment:
    return _DEFAULT.parse_judgment(text, system)


def parse_definitions(text: str) -> list[Definition]:
    return _DEFAULT.parse_definitions(text)

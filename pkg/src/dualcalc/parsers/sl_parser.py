"""Sλ2 具体语法解析器"""

from __future__ import annotations

from lark import Token, Transformer

from ..slambda2.terms import App, Inj1, Inj2, Lam, SLTerm, SPair, SVar, TAbs, TPack
from ..slambda2.types import ExistsT, ForallT, MNeg, MType, MVar, Prod, Sum
from .base import BaseParser


class SLTransformer(Transformer):
    def NAME(self, token: Token) -> str:  # noqa: N802
        return str(token)

    def TYVAR(self, token: Token) -> str:  # noqa: N802
        return str(token)

    def term_entry(self, args):
        return args[0]

    def type_entry(self, args):
        return args[0]

    def lam(self, args):
        binder, ann, body = args
        return Lam(binder, body, ann)

    def app(self, args):
        return App(*args)

    def annotated_app(self, args):
        left, ann, right = args
        return App(left, right, ann)

    def var(self, args):
        return SVar(args[0])

    def inj1(self, args):
        return Inj1(args[0])

    def inj2(self, args):
        return Inj2(args[0])

    def pair(self, args):
        return SPair(*args)

    def tabs(self, args):
        eigen, body = args
        return TAbs(body, eigen)

    def tpack(self, args):
        witness, body = args
        return TPack(body, witness)

    def annotation(self, args):
        return args[0]

    def eigen(self, args):
        return args[0]

    def forall_type(self, args):
        return ForallT(*args)

    def exists_type(self, args):
        return ExistsT(*args)

    def sum_type(self, args):
        return Sum(*args)

    def product_type(self, args):
        return Prod(*args)

    def type_var(self, args):
        return MVar(args[0])

    def negated_var(self, args):
        return MNeg(args[0])


class SLParser(BaseParser):
    """Sλ2 的解析器"""

    grammar_file = "sl.lark"
    starts = ("term_entry", "type_entry")

    def __init__(self):
        super().__init__("Sλ2")
        self.transformer = SLTransformer()

    def parse(self, text: str) -> SLTerm:
        return self._run(text, "term_entry", self.transformer)

    def parse_type(self, text: str) -> MType:
        return self._run(text, "type_entry", self.transformer)


_DEFAULT = SLParser()


def parse_sl(text: str) -> SLTerm:
    return _DEFAULT.parse(text)


def parse_sl_type(text: str) -> MType:
    return _DEFAULT.parse_type(text)

"""基础解析器"""

from __future__ import annotations

from abc import ABC, abstractmethod
from functools import lru_cache
from pathlib import Path
from typing import Any

from lark import Lark, Transformer, Tree
from lark.exceptions import UnexpectedCharacters, UnexpectedEOF, UnexpectedInput, VisitError

from ..errors import DualCalcError, DualCalcSyntaxError

GRAMMAR_DIR = Path(__file__).parent / "grammar"


@lru_cache(maxsize=None)
def load_grammar(grammar_file: str, starts: tuple[str, ...]) -> Lark:
    """按文件名加载并缓存 LALR 解析器"""
    text = (GRAMMAR_DIR / grammar_file).read_text(encoding="utf-8")
    return Lark(
        text,
        parser="lalr",
        lexer="contextual",
        start=list(starts),
        maybe_placeholders=True,
        propagate_positions=True,
    )


def _position(err: UnexpectedInput) -> tuple[int | None, int | None]:
    line = getattr(err, "line", None)
    column = getattr(err, "column", None)
    if not isinstance(line, int) or line < 1:
        return None, None
    return line, column


def _describe(err: UnexpectedInput) -> str:
    if isinstance(err, UnexpectedEOF):
        return "输入意外结束"
    if isinstance(err, UnexpectedCharacters):
        return f"无法识别的字符 {err.char!r}"
    token = getattr(err, "token", None)
    if token is not None:
        if token.type == "$END":
            return "输入意外结束"
        expected = sorted(getattr(err, "expected", ()) or ())
        hint = f"（期望: {', '.join(expected[:8])}）" if expected else ""
        return f"意外的记号 {str(token)!r}{hint}"
    return "语法错误"


class BaseParser(ABC):
    """具体语法解析器基类"""

    grammar_file: str = ""
    starts: tuple[str, ...] = ()

    def __init__(self, language: str):
        """
        初始化解析器

        Args:
            language: 语言名称（用于错误信息）
        """
        self.language = language

    @property
    def lark(self) -> Lark:
        return load_grammar(self.grammar_file, self.starts)

    @abstractmethod
    def parse(self, text: str) -> Any:
        """
        解析一段文本

        Args:
            text: 源文本

        Returns:
            语法树对象
        """
        pass

    def _parse_tree(self, text: str, start: str) -> Tree:
        try:
            return self.lark.parse(text, start=start)
        except UnexpectedInput as err:
            line, column = _position(err)
            raise DualCalcSyntaxError(f"{self.language}: {_describe(err)}", line, column) from None

    def _run(self, text: str, start: str, transformer: Transformer) -> Any:
        """解析并转换；转换过程中抛出的 DualCalcError 原样传出"""
        tree = self._parse_tree(text, start)
        try:
            return transformer.transform(tree)
        except VisitError as err:
            if isinstance(err.orig_exc, DualCalcError):
                raise err.orig_exc from None
            raise

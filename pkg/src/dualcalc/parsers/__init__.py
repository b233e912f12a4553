"""具体语法解析器模块"""

from .base import BaseParser
from .dc_parser import (
    DCParser,
    Definition,
    DefinitionKind,
    infer_system,
    make_judgment,
    parse_coterm,
    parse_definitions,
    parse_expr,
    parse_judgment,
    parse_statement,
    parse_term,
    parse_type,
)
from .sl_parser import SLParser, parse_sl, parse_sl_type
from .source import PRELUDE_PATH, SourceFile, load_prelude, load_source

__all__ = [
    "BaseParser",
    "DCParser",
    "Definition",
    "DefinitionKind",
    "PRELUDE_PATH",
    "SLParser",
    "SourceFile",
    "infer_system",
    "load_prelude",
    "load_source",
    "make_judgment",
    "parse_coterm",
    "parse_definitions",
    "parse_expr",
    "parse_judgment",
    "parse_sl",
    "parse_sl_type",
    "parse_statement",
    "parse_term",
    "parse_type",
]

"""标准库：语法糖与自然数、列表、流的编码"""

from .catalog import STDLIB, StdEntry, stdlib_entry, stdlib_judgment
from .encodings import (
    BOT,
    NAT,
    NAT_DUAL,
    TOP,
    X0,
    cons,
    cons_list,
    hd,
    ins,
    insert,
    itr_nat,
    list_type,
    nil,
    numeral,
    star,
    stream,
    stream_type,
    succ,
    tl,
    tl_n,
    zero,
)
from .sugar import (
    IMPLICATION_BETA_RULES,
    apply_to,
    at,
    choice,
    identity,
    lam,
    lam2,
    pi1,
    pi2,
)

__all__ = [
    "BOT",
    "IMPLICATION_BETA_RULES",
    "NAT",
    "NAT_DUAL",
    "STDLIB",
    "StdEntry",
    "TOP",
    "X0",
    "apply_to",
    "at",
    "choice",
    "cons",
    "cons_list",
    "hd",
    "identity",
    "ins",
    "insert",
    "itr_nat",
    "lam",
    "lam2",
    "list_type",
    "nil",
    "numeral",
    "pi1",
    "pi2",
    "star",
    "stdlib_entry",
    "stdlib_judgment",
    "stream",
    "stream_type",
    "succ",
    "tl",
    "tl_n",
    "zero",
]

"""
标准库目录：每个编码连同它声明的判断

CLI 的 stdlib 子命令与测试都从这里取条目；每个条目的判断都应能通过类型检查。
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from ..duality.involution import dual_judgment
from ..errors import DefinitionError
from ..syntax.names import covar, var
from ..syntax.terms import Covar, Cut, Term, Var
from ..syntax.types import And, TyVar, implies
from ..typecheck.context import Judgment, judgment
from . import encodings as enc
from .sugar import choice, identity, lam

A = TyVar("A")


@dataclass(frozen=True)
class StdEntry:
    """
    标准库条目

    Args:
        name: 条目名
        description: 中文说明
        build: 以整数参数 n 构造判断（只有 numeral 与 tl 使用 n）
    """

    name: str
    description: str
    build: Callable[[int], Judgment]


def _star(n: int) -> Judgment:
    return judgment(enc.star(), enc.TOP)


def _zero(n: int) -> Judgment:
    return judgment(enc.zero(), enc.NAT)


def _succ(n: int) -> Judgment:
    return judgment(enc.succ(Var(var("x"))), enc.NAT, gamma={var("x"): enc.NAT})


def _numeral(n: int) -> Judgment:
    return judgment(enc.numeral(n), enc.NAT)


def _itr(n: int) -> Judgment:
    f, m, k = var("f"), var("n"), covar("k")
    coterm = enc.itr_nat(enc.NAT, Var(f), Var(m), Covar(k))
    return judgment(
        coterm, enc.NAT, gamma={f: implies(enc.NAT, enc.NAT), m: enc.NAT}, delta={k: enc.NAT}
    )


def _iterate_succ(n: int) -> Judgment:
    """ñ • Itr[λx.succ⟨x⟩, 0, 'k]"""
    k = covar("k")
    step = enc.itr_nat(enc.NAT, _succ_fn(), enc.zero(), Covar(k))
    return judgment(Cut(enc.numeral(n), step), delta={k: enc.NAT})


def _succ_fn() -> Term:
    x = var("x")
    return lam(x, enc.succ(Var(x)), enc.NAT, enc.NAT)


def _nil(n: int) -> Judgment:
    return judgment(enc.nil(A), enc.list_type(A))


def _list_cons(n: int) -> Judgment:
    m, rest = var("m"), var("l")
    return judgment(
        enc.cons_list(Var(m), Var(rest), A),
        enc.list_type(A),
        gamma={m: A, rest: enc.list_type(A)},
    )


def _ins(n: int) -> Judgment:
    m, k = var("m"), covar("k")
    lists = enc.list_type(A)
    return judgment(enc.ins(Var(m), Covar(k), A), lists, {m: A}, {k: And(lists, lists)})


def _insert(n: int) -> Judgment:
    m, k = var("m"), covar("k")
    lists = enc.list_type(A)
    return judgment(enc.insert(Var(m), Covar(k), A), lists, {m: A}, {k: lists})


def _stream(n: int) -> Judgment:
    m = var("m")
    return judgment(enc.stream(Var(m)), enc.stream_type(A), gamma={m: A})


def _cons(n: int) -> Judgment:
    m, s = var("m"), var("s")
    return judgment(
        enc.cons(Var(m), Var(s), A),
        enc.stream_type(A),
        gamma={m: A, s: enc.stream_type(A)},
    )


def _hd(n: int) -> Judgment:
    k = covar("k")
    return judgment(enc.hd(Covar(k), A), enc.stream_type(A), delta={k: A})


def _tl(n: int) -> Judgment:
    k = covar("k")
    return judgment(enc.tl_n(n, Covar(k), A), enc.stream_type(A), delta={k: A})


def _identity(n: int) -> Judgment:
    return judgment(identity(var("x"), A), implies(A, A))


def _choice(n: int) -> Judgment:
    x, y = var("x"), var("y")
    return judgment(choice(Var(x), Var(y)), A, gamma={x: A, y: A})


def _zero_dual(n: int) -> Judgment:
    return dual_judgment(_zero(n))


_ENTRIES = [
    StdEntry("star", "* = λx.x : ⊤", _star),
    StdEntry("zero", "0 : Nat", _zero),
    StdEntry("succ", "x:Nat ⊢ succ⟨x⟩ : Nat", _succ),
    StdEntry("numeral", "ñ : Nat", _numeral),
    StdEntry("itr", "Itr^Nat[f, n, 'k] : Nat", _itr),
    StdEntry("iterate-succ", "ñ • Itr[λx.succ⟨x⟩, 0, 'k]", _iterate_succ),
    StdEntry("nil", "nil : List(A)", _nil),
    StdEntry("list-cons", "m :: l : List(A)", _list_cons),
    StdEntry("ins", "ins_m['k] : List(A)", _ins),
    StdEntry("insert", "insert_m['k] : List(A)", _insert),
    StdEntry("stream", "stream(m) : Stream(A)", _stream),
    StdEntry("cons", "cons⟨m, s⟩ : Stream(A)", _cons),
    StdEntry("hd", "hd['k] : Stream(A)", _hd),
    StdEntry("tl", "tl^n[hd['k]] : Stream(A)", _tl),
    StdEntry("identity", "λx.x : A ⊃ A", _identity),
    StdEntry("choice", "⟨x|y⟩ : A", _choice),
    StdEntry("zero-dual", "(0)° = hd[(*)°] : Stream(⊥)", _zero_dual),
]

STDLIB: dict[str, StdEntry] = {entry.name: entry for entry in _ENTRIES}


def stdlib_entry(name: str) -> StdEntry:
    try:
        return STDLIB[name]
    except KeyError:
        known = ", ".join(STDLIB)
        raise DefinitionError(f"未知的标准库条目: {name}（可用: {known}）") from None


def stdlib_judgment(name: str, n: int = 2) -> Judgment:
    return stdlib_entry(name).build(n)

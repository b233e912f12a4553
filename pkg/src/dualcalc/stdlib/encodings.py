"""
标准库：⊤、⊥、自然数、列表、流与列表插入

X0 是一个特定的类型变量；⊤ = ¬X0 ∨ X0，⊥ = ¬X0 ∧ X0，* = λx.x。
所有构造都带上 in/out/coitr/itr 必需的注解，并尽量写入 inl/inr/切割的可选注解，
因此在严格模式下也能通过检查。
"""

from __future__ import annotations

from typing import Optional

from ..syntax.names import Name, NameSupply
from ..syntax.terms import (
    BindCo,
    BindVar,
    Case,
    Coitr,
    Coterm,
    Covar,
    Cut,
    Expr,
    Fst,
    In,
    Inl,
    Inr,
    Itr,
    Out,
    Pair,
    Snd,
    Term,
    Var,
)
from ..syntax.traversal import supply_for
from ..syntax.types import And, Mu, Not, Nu, Or, TypeExpr, TyVar, implies
from .sugar import at, choice, lam, pi1, pi2

X0 = TyVar("X0")
TOP = Or(Not(X0), X0)
BOT = And(Not(X0), X0)
NAT = Mu("X", Or(TOP, TyVar("X")))
NAT_BODY = Or(TOP, NAT)


def star() -> Term:
    """* = λx.x : ⊤"""
    x = Name("x")
    return lam(x, Var(x), X0, X0)


def _fresh(supply: Optional[NameSupply], *parts: Expr) -> NameSupply:
    return supply if supply is not None else supply_for(*parts)


# ---------------------------------------------------------------------------
# 自然数
# ---------------------------------------------------------------------------


def zero() -> Term:
    """0 = in^Nat⟨⟨*⟩inl⟩"""
    return In(NAT, Inl(star(), ann=NAT_BODY))


def succ(m: Term) -> Term:
    """succ⟨M⟩ = in^Nat⟨⟨M⟩inr⟩"""
    return In(NAT, Inr(m, ann=NAT_BODY))


def numeral(n: int) -> Term:
    """ñ = succ⟨…succ⟨0⟩…⟩"""
    if n < 0:
        raise ValueError("numeral 只接受非负整数")
    term = zero()
    for _ in range(n):
        term = succ(term)
    return term


def itr_nat(
    b: TypeExpr, f: Term, n: Term, k: Coterm, *, supply: Optional[NameSupply] = None
) -> Coterm:
    """
    Itr^B[F, N, K] = itr^B_α[[y.(N • α), x.(F • (x@α))], K]

    ñ • Itr^B[λx.M, N, K] 归约到 M[_/x]^n(N) • K。
    """
    supply = _fresh(supply, f, n, k)
    alpha = supply.fresh_covar("a")
    y = supply.fresh_var("y")
    x = supply.fresh_var("x")
    step = Case(
        BindVar(y, Cut(n, Covar(alpha), ann=b)),
        BindVar(x, Cut(f, at(Var(x), Covar(alpha)), ann=implies(b, b))),
    )
    return Itr(b, alpha, step, k)


# ---------------------------------------------------------------------------
# 列表
# ---------------------------------------------------------------------------


def list_type(a: TypeExpr) -> Mu:
    """List(A) = μX.(⊤ ∨ (A ∧ X))"""
    return Mu("X", Or(TOP, And(a, TyVar("X"))))


def _list_body(a: TypeExpr) -> TypeExpr:
    return Or(TOP, And(a, list_type(a)))


def nil(a: TypeExpr) -> Term:
    return In(list_type(a), Inl(star(), ann=_list_body(a)))


def cons_list(m: Term, nl: Term, a: TypeExpr) -> Term:
    """M :: Nl"""
    return In(list_type(a), Inr(Pair(m, nl), ann=_list_body(a)))


def ins(m: Term, k: Coterm, a: TypeExpr, *, supply: Optional[NameSupply] = None) -> Coterm:
    """
    ins_M[K'] = itr^{List(A)∧List(A)}_α[[L1(α), L2(α)], K']

    结果对 ⟨插入后的列表, 原列表⟩。L2 的第二个候选的原列表分量取 π1(z)::π2π2(z)。
    """
    supply = _fresh(supply, m, k)
    carrier = And(list_type(a), list_type(a))
    alpha = supply.fresh_covar("a")
    x = supply.fresh_var("x")
    z = supply.fresh_var("z")
    head = pi1(Var(z), supply=supply)
    inserted_tail = pi1(pi2(Var(z), supply=supply), supply=supply)
    original_tail = pi2(pi2(Var(z), supply=supply), supply=supply)
    base = Pair(cons_list(m, nil(a), a), nil(a))
    original = cons_list(head, original_tail, a)
    later = Pair(cons_list(head, inserted_tail, a), original)
    here = Pair(cons_list(m, cons_list(head, original_tail, a), a), original)
    step = Case(
        BindVar(x, Cut(base, Covar(alpha), ann=carrier)),
        BindVar(z, Cut(choice(later, here, supply=supply), Covar(alpha), ann=carrier)),
    )
    return Itr(carrier, alpha, step, k)


def insert(m: Term, k: Coterm, a: TypeExpr, *, supply: Optional[NameSupply] = None) -> Coterm:
    """insert_M[K] = ins_M[fst[K]]"""
    return ins(m, Fst(k), a, supply=supply)


# ---------------------------------------------------------------------------
# 流
# ---------------------------------------------------------------------------


def stream_type(a: TypeExpr) -> Nu:
    """Stream(A) = νX.(A ∧ X)"""
    return Nu("X", And(a, TyVar("X")))


# Nat 的对偶恰好是 Stream(⊥)
NAT_DUAL = stream_type(BOT)


def cons(m: Term, ns: Term, a: TypeExpr, *, supply: Optional[NameSupply] = None) -> Term:
    """cons⟨M, Ns⟩ = coitr^{A∧Stream(A)}_x⟨⟨π1(x), (π2(x) • out[α]).α⟩, ⟨M, Ns⟩⟩"""
    supply = _fresh(supply, m, ns)
    carrier = And(a, stream_type(a))
    x = supply.fresh_var("x")
    alpha = supply.fresh_covar("a")
    rest = BindCo(Cut(pi2(Var(x), supply=supply), Out(stream_type(a), Covar(alpha))), alpha)
    return Coitr(carrier, x, Pair(pi1(Var(x), supply=supply), rest), Pair(m, ns))


def hd(k: Coterm, a: TypeExpr) -> Coterm:
    return Out(stream_type(a), Fst(k))


def tl(k: Coterm, a: TypeExpr) -> Coterm:
    return Out(stream_type(a), Snd(k))


def tl_n(n: int, k: Coterm, a: TypeExpr) -> Coterm:
    """tl^n[hd[K]]"""
    coterm = hd(k, a)
    for _ in range(n):
        coterm = tl(coterm, a)
    return coterm


def stream(m: Term, *, supply: Optional[NameSupply] = None) -> Term:
    """stream(M) = coitr^⊤_x⟨⟨M, x⟩, *⟩：每个元素都是 M 的流"""
    supply = _fresh(supply, m)
    x = supply.fresh_var("x")
    return Coitr(TOP, x, Pair(m, Var(x)), star())

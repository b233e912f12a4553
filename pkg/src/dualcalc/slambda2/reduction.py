"""Sλ2 的归约：规则的相容闭包与带燃料的最左归约"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum

from ..reduction.engine import TraceStatus
from .terms import (
    App,
    Inj1,
    Inj2,
    Lam,
    SLTerm,
    SPair,
    SVar,
    TAbs,
    TPack,
    sl_free_vars,
    sl_positions,
    sl_replace_at,
    sl_subterm_at,
    sl_subst,
)


class SLRule(str, Enum):
    BETA_R = "βr"
    BETA_L = "βl"
    BETA_PROD_SUM1 = "β×+1"
    BETA_PROD_SUM2 = "β×+2"
    BETA_SUM_PROD1 = "β+×1"
    BETA_SUM_PROD2 = "β+×2"
    BETA_FORALL_EXISTS = "β∀∃"
    BETA_EXISTS_FORALL = "β∃∀"
    ETA_R = "ηr"
    ETA_L = "ηl"

    def __str__(self) -> str:
        return self.value


@dataclass(frozen=True)
class SLRedex:
    path: tuple[int, ...]
    rule: SLRule

    def __str__(self) -> str:
        where = ".".join(map(str, self.path)) if self.path else "ε"
        return f"{self.rule} @ {where}"


@dataclass(frozen=True)
class SLStep:
    redex: SLRedex
    term: SLTerm


@dataclass
class SLTrace:
    start: SLTerm
    steps: list[SLStep] = field(default_factory=list)
    status: TraceStatus = TraceStatus.NORMAL_FORM

    @property
    def final(self) -> SLTerm:
        return self.steps[-1].term if self.steps else self.start

    def __len__(self) -> int:
        return len(self.steps)


def _rules_at(t: SLTerm) -> list[SLRule]:
    found: list[SLRule] = []
    match t:
        case App(left, right):
            if isinstance(left, Lam):
                found.append(SLRule.BETA_R)
            if isinstance(right, Lam):
                found.append(SLRule.BETA_L)
            if isinstance(left, SPair) and isinstance(right, Inj1):
                found.append(SLRule.BETA_PROD_SUM1)
            if isinstance(left, SPair) and isinstance(right, Inj2):
                found.append(SLRule.BETA_PROD_SUM2)
            if isinstance(left, Inj1) and isinstance(right, SPair):
                found.append(SLRule.BETA_SUM_PROD1)
            if isinstance(left, Inj2) and isinstance(right, SPair):
                found.append(SLRule.BETA_SUM_PROD2)
            if isinstance(left, TAbs) and isinstance(right, TPack):
                found.append(SLRule.BETA_FORALL_EXISTS)
            if isinstance(left, TPack) and isinstance(right, TAbs):
                found.append(SLRule.BETA_EXISTS_FORALL)
        case Lam(binder, App(left, right)):
            if left == SVar(binder) and binder not in sl_free_vars(right):
                found.append(SLRule.ETA_R)
            if right == SVar(binder) and binder not in sl_free_vars(left):
                found.append(SLRule.ETA_L)
    return found


def sl_redexes(t: SLTerm) -> list[SLRedex]:
    return [SLRedex(path, rule) for path, node in sl_positions(t) for rule in _rules_at(node)]


def _contract(t: SLTerm, rule: SLRule) -> SLTerm:
    match rule, t:
        case SLRule.BETA_R, App(Lam(binder, body), arg):
            return sl_subst(body, arg, binder)
        case SLRule.BETA_L, App(arg, Lam(binder, body)):
            return sl_subst(body, arg, binder)
        case SLRule.BETA_PROD_SUM1, App(SPair(first, _), Inj1(u)):
            return App(first, u)
        case SLRule.BETA_PROD_SUM2, App(SPair(_, second), Inj2(u)):
            return App(second, u)
        case SLRule.BETA_SUM_PROD1, App(Inj1(u), SPair(first, _)):
            return App(u, first)
        case SLRule.BETA_SUM_PROD2, App(Inj2(u), SPair(_, second)):
            return App(u, second)
        case SLRule.BETA_FORALL_EXISTS, App(TAbs(left), TPack(right)):
            return App(left, right)
        case SLRule.BETA_EXISTS_FORALL, App(TPack(left), TAbs(right)):
            return App(left, right)
        case SLRule.ETA_R, Lam(_, App(_, rest)):
            return rest
        case SLRule.ETA_L, Lam(_, App(rest, _)):
            return rest
    raise ValueError(f"{rule} 不适用于 {t}")


def sl_step(t: SLTerm, redex: SLRedex) -> SLTerm:
    node = sl_subterm_at(t, redex.path)
    if redex.rule not in _rules_at(node):
        raise ValueError(f"{redex} 不是可约式")
    return sl_replace_at(t, redex.path, _contract(node, redex.rule))


def step_sl(t: SLTerm) -> list[tuple[SLRedex, SLTerm]]:
    """全部一步归约结果"""
    return [(r, sl_step(t, r)) for r in sl_redexes(t)]


def normalize_sl(t: SLTerm, fuel: int = 10_000) -> SLTrace:
    """沿最左可约式归约，最多 fuel 步"""
    trace = SLTrace(t)
    current = t
    for _ in range(fuel):
        found = sl_redexes(current)
        if not found:
            return trace
        current = sl_step(current, found[0])
        trace.steps.append(SLStep(found[0], current))
    if sl_redexes(current):
        trace.status = TraceStatus.FUEL_EXHAUSTED
    return trace

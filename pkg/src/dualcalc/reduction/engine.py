"""
单步归约与多步归约

step 在指定位置收缩一个可约式；normalize 沿最左可约式走到底，或深度优先枚举全部极大归约序列。
燃料耗尽是序列的状态，不是异常。
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from typing import Optional, Union

from ..config import DEFAULT_LIMITS, Limits
from ..errors import InvalidRedex
from ..syntax.names import NameSupply
from ..syntax.traversal import replace_at, subexpr_at, supply_for
from ..syntax.terms import Expr
from .redex import Redex, contract, redexes, rules_at
from .rules import NONDET, Mode, ReductionRule, Strategy, StrategyKind


class TraceStatus(str, Enum):
    NORMAL_FORM = "normal_form"
    FUEL_EXHAUSTED = "fuel_exhausted"


class Pick(str, Enum):
    LEFTMOST = "leftmost"
    ALL = "all"


@dataclass(frozen=True)
class TraceStep:
    redex: Redex
    expr: Expr


@dataclass
class Trace:
    """一条归约序列：起点、每一步 (可约式, 结果)、终止状态"""

    start: Expr
    steps: list[TraceStep] = field(default_factory=list)
    status: TraceStatus = TraceStatus.NORMAL_FORM

    @property
    def final(self) -> Expr:
        return self.steps[-1].expr if self.steps else self.start

    @property
    def exprs(self) -> list[Expr]:
        return [self.start] + [s.expr for s in self.steps]

    @property
    def rules(self) -> list[ReductionRule]:
        return [s.redex.rule for s in self.steps]

    def __len__(self) -> int:
        return len(self.steps)


@dataclass
class TraceSet:
    """全部极大归约序列；cap_hit 表示条数达到上限后停止了枚举"""

    traces: list[Trace]
    cap_hit: bool = False

    @property
    def finals(self) -> list[Expr]:
        return [t.final for t in self.traces if t.status is TraceStatus.NORMAL_FORM]


def strategy_for_label(redex: Redex) -> Strategy:
    """能产生该标签的最宽策略：v 对应 CBV，n 对应 CBN，无下标对应非确定归约"""
    eta_or = redex.rule in (ReductionRule.ETA_OR, ReductionRule.ETA_AND)
    if redex.label.mode is Mode.VALUE:
        kind = StrategyKind.CBV
    elif redex.label.mode is Mode.NAME:
        kind = StrategyKind.CBN
    else:
        kind = StrategyKind.NONDET
    return Strategy(kind, NONDET.system, eta_or)


def step(
    e: Expr,
    redex: Redex,
    strategy: Optional[Strategy] = None,
    *,
    supply: Optional[NameSupply] = None,
    seed: int = 0,
) -> Expr:
    """
    收缩 e 中 redex.path 处的可约式

    Raises:
        InvalidRedex: 该位置不存在，或那里的子表达式不再匹配规则左部
    """
    strategy = strategy or strategy_for_label(redex)
    try:
        node = subexpr_at(e, redex.path)
    except (IndexError, KeyError, AttributeError):
        raise InvalidRedex(redex.path, str(redex.label)) from None
    if redex.label.mode is not strategy.mode or redex.rule not in rules_at(node, strategy):
        raise InvalidRedex(redex.path, str(redex.label))
    contracted = contract(node, redex.label, supply or supply_for(e, seed=seed))
    return replace_at(e, redex.path, contracted)


def _leftmost(e: Expr, strategy: Strategy, fuel: int, seed: int) -> Trace:
    trace = Trace(e)
    current = e
    for _ in range(fuel):
        found = redexes(current, strategy)
        if not found:
            return trace
        redex = found[0]
        current = step(current, redex, strategy, seed=seed)
        trace.steps.append(TraceStep(redex, current))
    if redexes(current, strategy):
        trace.status = TraceStatus.FUEL_EXHAUSTED
    return trace


def _all(e: Expr, strategy: Strategy, fuel: int, max_traces: int, seed: int) -> TraceSet:
    result = TraceSet([])
    stack: list[tuple[Expr, list[TraceStep]]] = [(e, [])]
    while stack:
        current, steps = stack.pop()
        found = redexes(current, strategy)
        if not found or len(steps) >= fuel:
            status = TraceStatus.FUEL_EXHAUSTED if found else TraceStatus.NORMAL_FORM
            result.traces.append(Trace(e, steps, status))
            if len(result.traces) >= max_traces and stack:
                result.cap_hit = True
                break
            continue
        # 逆序入栈，使最左可约式先被展开
        for redex in reversed(found):
            nxt = step(current, redex, strategy, seed=seed)
            stack.append((nxt, steps + [TraceStep(redex, nxt)]))
    return result


def normalize(
    e: Expr,
    strategy: Strategy = NONDET,
    fuel: Optional[int] = None,
    pick: Pick = Pick.LEFTMOST,
    *,
    limits: Limits = DEFAULT_LIMITS,
    seed: int = 0,
) -> Union[Trace, TraceSet]:
    """
    多步归约

    Args:
        e: 起点表达式
        strategy: 归约策略
        fuel: 最大步数，默认取 limits.fuel
        pick: LEFTMOST 返回一条序列；ALL 返回全部极大序列
        limits: 运行上限
        seed: 新名字供给的起点

    Returns:
        Trace 或 TraceSet
    """
    fuel = limits.fuel if fuel is None else fuel
    if fuel <= 0:
        raise ValueError("fuel 必须为正数")
    if pick is Pick.ALL:
        return _all(e, strategy, fuel, limits.max_traces, seed)
    return _leftmost(e, strategy, fuel, seed)


def normal_form(
    e: Expr, strategy: Strategy = NONDET, *, limits: Limits = DEFAULT_LIMITS, seed: int = 0
) -> Expr:
    """最左归约的终点（燃料耗尽时返回最后到达的表达式）"""
    trace = normalize(e, strategy, limits=limits, seed=seed)
    assert isinstance(trace, Trace)
    return trace.final

"""归约规则名、规则标签与策略"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Optional

from ..syntax.types import System


class ReductionRule(str, Enum):
    BETA_AND1 = "β∧1"
    BETA_AND2 = "β∧2"
    BETA_OR1 = "β∨1"
    BETA_OR2 = "β∨2"
    BETA_NOT = "β¬"
    BETA_R = "βR"
    BETA_L = "βL"
    ETA_R = "ηR"
    ETA_L = "ηL"
    BETA_MU = "βμ"
    BETA_NU = "βν"
    BETA_FORALL = "β∀"
    BETA_EXISTS = "β∃"
    SIGMA_AND1 = "ς∧1"
    SIGMA_AND2 = "ς∧2"
    SIGMA_OR1 = "ς∨1"
    SIGMA_OR2 = "ς∨2"
    SIGMA_MU = "ςμ"
    SIGMA_NU = "ςν"
    # 假设性规则，默认关闭
    ETA_OR = "η∨"
    ETA_AND = "η∧"

    def __str__(self) -> str:
        return self.value

    @property
    def is_sigma(self) -> bool:
        return self in SIGMA_RULES


SIGMA_RULES = frozenset(
    {
        ReductionRule.SIGMA_AND1,
        ReductionRule.SIGMA_AND2,
        ReductionRule.SIGMA_OR1,
        ReductionRule.SIGMA_OR2,
        ReductionRule.SIGMA_MU,
        ReductionRule.SIGMA_NU,
    }
)

_RULE_PAIRS = [
    (ReductionRule.BETA_AND1, ReductionRule.BETA_OR1),
    (ReductionRule.BETA_AND2, ReductionRule.BETA_OR2),
    (ReductionRule.BETA_R, ReductionRule.BETA_L),
    (ReductionRule.ETA_R, ReductionRule.ETA_L),
    (ReductionRule.BETA_MU, ReductionRule.BETA_NU),
    (ReductionRule.BETA_FORALL, ReductionRule.BETA_EXISTS),
    # 值调用的 ⟨𝓜,N⟩ 对应名调用的 [𝓚,L]，⟨𝓜⟩inl 对应 fst[𝓚]
    (ReductionRule.SIGMA_AND1, ReductionRule.SIGMA_OR1),
    (ReductionRule.SIGMA_AND2, ReductionRule.SIGMA_OR2),
    (ReductionRule.SIGMA_MU, ReductionRule.SIGMA_NU),
    (ReductionRule.ETA_OR, ReductionRule.ETA_AND),
]
RULE_DUALS: dict[ReductionRule, ReductionRule] = {ReductionRule.BETA_NOT: ReductionRule.BETA_NOT}
for _a, _b in _RULE_PAIRS:
    RULE_DUALS[_a] = _b
    RULE_DUALS[_b] = _a


def dual_rule(rule: ReductionRule) -> ReductionRule:
    return RULE_DUALS[rule]


class Mode(str, Enum):
    VALUE = "v"
    NAME = "n"

    def dual(self) -> "Mode":
        return Mode.NAME if self is Mode.VALUE else Mode.VALUE


@dataclass(frozen=True)
class RuleLabel:
    """规则名加上策略下标（值调用 v、名调用 n，非确定归约无下标）"""

    rule: ReductionRule
    mode: Optional[Mode] = None

    def dual(self) -> "RuleLabel":
        return RuleLabel(dual_rule(self.rule), self.mode.dual() if self.mode else None)

    def __str__(self) -> str:
        return f"{self.rule}_{self.mode.value}" if self.mode else str(self.rule)


class StrategyKind(str, Enum):
    NONDET = "nd"
    WEAK_CBV = "wcbv"
    WEAK_CBN = "wcbn"
    CBV = "cbv"
    CBN = "cbn"


_KIND_DUALS = {
    StrategyKind.NONDET: StrategyKind.NONDET,
    StrategyKind.WEAK_CBV: StrategyKind.WEAK_CBN,
    StrategyKind.WEAK_CBN: StrategyKind.WEAK_CBV,
    StrategyKind.CBV: StrategyKind.CBN,
    StrategyKind.CBN: StrategyKind.CBV,
}


@dataclass(frozen=True)
class Strategy:
    """
    归约策略

    Args:
        kind: nd / wcbv / wcbn / cbv / cbn
        system: DC、DCμν 或 DC2（DC2 只有非确定归约）
        eta_or: 启用假设性的 (η∨) 规则（及其对偶 (η∧)），仅用于复现不合流的反例
    """

    kind: StrategyKind = StrategyKind.NONDET
    system: System = System.DCMUNU
    eta_or: bool = False

    def __post_init__(self):
        if self.system is System.DC2 and self.kind is not StrategyKind.NONDET:
            raise ValueError("DC2 只定义了非确定归约")

    @property
    def mode(self) -> Optional[Mode]:
        if self.kind in (StrategyKind.WEAK_CBV, StrategyKind.CBV):
            return Mode.VALUE
        if self.kind in (StrategyKind.WEAK_CBN, StrategyKind.CBN):
            return Mode.NAME
        return None

    @property
    def has_sigma(self) -> bool:
        return self.kind in (StrategyKind.CBV, StrategyKind.CBN)

    def dual(self) -> "Strategy":
        return Strategy(_KIND_DUALS[self.kind], self.system, self.eta_or)

    def __str__(self) -> str:
        return self.kind.value


NONDET = Strategy(StrategyKind.NONDET)
WEAK_CBV = Strategy(StrategyKind.WEAK_CBV)
WEAK_CBN = Strategy(StrategyKind.WEAK_CBN)
CBV = Strategy(StrategyKind.CBV)
CBN = Strategy(StrategyKind.CBN)
NONDET_DC2 = Strategy(StrategyKind.NONDET, System.DC2)

"""主体归约检查：一步归约的每个结果在同一判断下重新检查类型"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional

from ..errors import DualCalcError
from ..reduction import NONDET, Redex, Strategy, redexes, step
from ..syntax.terms import Expr
from ..syntax.traversal import supply_for
from .checker import check
from .context import Judgment


@dataclass(frozen=True)
class Finding:
    """一个没有通过重新检查的归约结果"""

    redex: Redex
    reduct: Expr
    error: DualCalcError

    def __str__(self) -> str:
        return f"{self.redex}: {self.error.message}"


@dataclass
class SubjectReductionReport:
    judgment: Judgment
    strategy: Strategy
    checked: list[tuple[Redex, Expr]] = field(default_factory=list)
    findings: list[Finding] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.findings


def check_reduct_types(
    j: Judgment, strategy: Strategy = NONDET, *, infer: bool = False, seed: int = 0
) -> SubjectReductionReport:
    """
    列举 j.principal 在策略下的全部一步归约结果，并在同一判断下逐个检查

    检查失败记录为 finding，不抛出异常。起点本身必须可以通过检查。
    """
    check(j, infer=infer)
    report = SubjectReductionReport(j, strategy)
    for redex in redexes(j.principal, strategy):
        reduct = step(j.principal, redex, strategy, supply=supply_for(j.principal, seed=seed))
        report.checked.append((redex, reduct))
        error: Optional[DualCalcError] = None
        try:
            check(j.with_principal(reduct), infer=infer)
        except DualCalcError as exc:
            error = exc
        if error is not None:
            report.findings.append(Finding(redex, reduct, error))
    return report

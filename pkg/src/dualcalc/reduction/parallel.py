"""
弱值调用的并行归约 ⇒

D ⇒ E 按归纳定义枚举：各子表达式并行归约后做同余组合，或者收缩 D 根部已有的一个可约式。
根部可约式的形状只看 D 本身，子表达式里新产生的可约式不在同一步里收缩；
值条件看分量的归约结果，所以 M • x.(S) ⇒ S′[V/x] 要求 M ⇒ V。
"""

from __future__ import annotations

from collections.abc import Iterable, Iterator
from itertools import product
from typing import Optional

from ..config import DEFAULT_LIMITS, Limits
from ..errors import SetCapHit
from ..syntax.names import NameSupply
from ..syntax.terms import BindCo, BindVar, Cut, Expr
from ..syntax.traversal import alpha_key, children, rebuild, supply_for
from .redex import contract, rules_at
from .rules import WEAK_CBV, ReductionRule, RuleLabel

R = ReductionRule

_BINDER_RULES = (R.BETA_R, R.BETA_L)


class _Parallel:
    def __init__(self, supply: NameSupply, cap: int):
        self.supply = supply
        self.cap = cap
        self.memo: dict[int, tuple[Expr, list[Expr]]] = {}
        self.congruent_memo: dict[int, tuple[Expr, list[Expr]]] = {}

    def _collect(self, results: dict[tuple, Expr], e: Expr) -> None:
        results.setdefault(alpha_key(e), e)
        if len(results) > self.cap:
            raise SetCapHit(self.cap)

    def congruent(self, e: Expr) -> list[Expr]:
        """根部构造不变、子表达式各自并行归约的结果"""
        cached = self.congruent_memo.get(id(e))
        if cached is not None and cached[0] is e:
            return cached[1]
        results: dict[tuple, Expr] = {}
        for combo in product(*(self.reducts(c) for c in children(e))):
            self._collect(results, rebuild(e, combo))
        found = list(results.values())
        self.congruent_memo[id(e)] = (e, found)
        return found

    def reducts(self, e: Expr) -> list[Expr]:
        cached = self.memo.get(id(e))
        if cached is not None and cached[0] is e:
            return cached[1]
        results: dict[tuple, Expr] = {}
        for reduct in self.congruent(e):
            self._collect(results, reduct)
        for reduct in self._contracted(e):
            self._collect(results, reduct)
        found = list(results.values())
        self.memo[id(e)] = (e, found)
        return found

    def _contracted(self, e: Expr) -> Iterator[Expr]:
        if not isinstance(e, Cut):
            # (M • α).α ⇒ M′ 与 x.(x • K) ⇒ K′，新鲜性条件看 D 本身
            for rule in rules_at(e, WEAK_CBV):
                if rule is R.ETA_R:
                    yield from self.reducts(e.body.term)
                elif rule is R.ETA_L:
                    yield from self.reducts(e.body.coterm)
            return
        m, k = e.term, e.coterm
        yield from self._fire(e, self.congruent(m), self.congruent(k), None)
        if isinstance(m, BindCo):
            yield from self._fire(e, self.congruent(m), self.reducts(k), R.BETA_R)
        if isinstance(k, BindVar):
            yield from self._fire(e, self.reducts(m), self.congruent(k), R.BETA_L)

    def _fire(
        self,
        cut: Cut,
        terms: Iterable[Expr],
        coterms: Iterable[Expr],
        only: Optional[ReductionRule],
    ) -> Iterator[Expr]:
        """only 为 None 时收缩构造子对构造子的可约式"""
        for m, k in product(terms, coterms):
            rebuilt = rebuild(cut, (m, k))
            for rule in rules_at(rebuilt, WEAK_CBV):
                wanted = rule is only if only is not None else rule not in _BINDER_RULES
                if wanted:
                    yield contract(rebuilt, RuleLabel(rule, WEAK_CBV.mode), self.supply)


def parallel_step(
    e: Expr,
    *,
    limits: Limits = DEFAULT_LIMITS,
    cap: Optional[int] = None,
    seed: int = 0,
) -> list[Expr]:
    """
    {E | D ⇒ E}，按 alpha 等价去重，总是包含 D 本身

    Raises:
        SetCapHit: 某个中间集合超过上限
    """
    worker = _Parallel(supply_for(e, seed=seed), limits.parallel_cap if cap is None else cap)
    return worker.reducts(e)


def parallel_reduces(d: Expr, e: Expr, *, limits: Limits = DEFAULT_LIMITS, seed: int = 0) -> bool:
    """D ⇒ E 是否成立（alpha 等价意义下）"""
    goal = alpha_key(e)
    return any(alpha_key(r) == goal for r in parallel_step(d, limits=limits, seed=seed))

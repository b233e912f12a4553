"""
归约图

以 alpha 等价（忽略注解）为节点身份做广度优先探索，节点数与深度受上限约束。
合流性与强正规化给出三值判定：触顶时无法确认的结论报告为 UNKNOWN。
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass, field
from enum import Enum
from typing import Optional

from ..config import DEFAULT_LIMITS, Limits
from ..syntax.terms import Expr
from ..syntax.traversal import alpha_key, positions, subexpr_at
from .engine import TraceStep, step
from .redex import Redex, redexes
from .rules import NONDET, Strategy


class Verdict(str, Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __bool__(self) -> bool:
        return self is Verdict.YES


@dataclass
class CapHit:
    """探索是否因节点数或深度上限而截断"""

    nodes: bool = False
    depth: bool = False

    def __bool__(self) -> bool:
        return self.nodes or self.depth


@dataclass(frozen=True)
class Edge:
    source: int
    target: int
    redex: Redex


@dataclass
class ReductionGraph:
    """
    归约图

    节点按发现顺序编号，0 为起点；expanded[i] 为 False 的节点没有被展开（触顶）。
    """

    strategy: Strategy
    nodes: list[Expr] = field(default_factory=list)
    depths: list[int] = field(default_factory=list)
    expanded: list[bool] = field(default_factory=list)
    edges: list[Edge] = field(default_factory=list)
    cap_hit: CapHit = field(default_factory=CapHit)
    _index: dict[tuple, int] = field(default_factory=dict, repr=False)

    @property
    def root(self) -> Expr:
        return self.nodes[0]

    def index_of(self, e: Expr) -> Optional[int]:
        return self._index.get(alpha_key(e))

    def __contains__(self, e: Expr) -> bool:
        return self.index_of(e) is not None

    def __len__(self) -> int:
        return len(self.nodes)

    def adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in self.nodes]
        for edge in self.edges:
            if edge.target not in adj[edge.source]:
                adj[edge.source].append(edge.target)
        return adj

    def normal_form_indices(self) -> list[int]:
        """已展开且没有出边的节点"""
        has_out = {edge.source for edge in self.edges}
        return [i for i, done in enumerate(self.expanded) if done and i not in has_out]

    def normal_forms(self) -> list[Expr]:
        return [self.nodes[i] for i in self.normal_form_indices()]

    def _add(self, e: Expr, depth: int) -> int:
        key = alpha_key(e)
        self._index[key] = len(self.nodes)
        self.nodes.append(e)
        self.depths.append(depth)
        self.expanded.append(False)
        return len(self.nodes) - 1


def build_graph(
    e: Expr, strategy: Strategy = NONDET, *, limits: Limits = DEFAULT_LIMITS, seed: int = 0
) -> ReductionGraph:
    """广度优先构造归约图"""
    graph = ReductionGraph(strategy)
    graph._add(e, 0)
    queue = deque([0])
    while queue:
        i = queue.popleft()
        current, depth = graph.nodes[i], graph.depths[i]
        found = redexes(current, strategy)
        if found and depth >= limits.max_depth:
            graph.cap_hit.depth = True
            continue
        complete = True
        for redex in found:
            reduct = step(current, redex, strategy, seed=seed)
            target = graph.index_of(reduct)
            if target is None:
                if len(graph.nodes) >= limits.max_nodes:
                    graph.cap_hit.nodes = True
                    complete = False
                    continue
                target = graph._add(reduct, depth + 1)
                queue.append(target)
            graph.edges.append(Edge(i, target, redex))
        graph.expanded[i] = complete
    return graph


def _sccs(adj: list[list[int]]) -> list[int]:
    """迭代版 Tarjan 算法，返回每个节点所属强连通分量的编号"""
    n = len(adj)
    index = [-1] * n
    low = [0] * n
    on_stack = [False] * n
    comp = [-1] * n
    stack: list[int] = []
    counter = 0
    n_comp = 0
    for root in range(n):
        if index[root] != -1:
            continue
        work = [(root, 0)]
        while work:
            v, pos = work.pop()
            if pos == 0:
                index[v] = low[v] = counter
                counter += 1
                stack.append(v)
                on_stack[v] = True
            recurse = False
            for j in range(pos, len(adj[v])):
                w = adj[v][j]
                if index[w] == -1:
                    work.append((v, j + 1))
                    work.append((w, 0))
                    recurse = True
                    break
                if on_stack[w]:
                    low[v] = min(low[v], index[w])
            if recurse:
                continue
            if low[v] == index[v]:
                while True:
                    w = stack.pop()
                    on_stack[w] = False
                    comp[w] = n_comp
                    if w == v:
                        break
                n_comp += 1
            if work:
                parent = work[-1][0]
                low[parent] = min(low[parent], low[v])
    return comp


def _has_cycle(graph: ReductionGraph) -> bool:
    adj = graph.adjacency()
    if any(i in succ for i, succ in enumerate(adj)):
        return True
    comp = _sccs(adj)
    return len(set(comp)) < len(comp)


def confluent(graph: ReductionGraph) -> Verdict:
    """
    合流性判定

    完整的有限图合流，当且仅当每个节点恰好能到达一个终端强连通分量。
    触顶时：能到达两个不同的正规形则为 NO，否则 UNKNOWN。
    """
    if graph.cap_hit:
        return Verdict.NO if len(graph.normal_form_indices()) > 1 else Verdict.UNKNOWN
    adj = graph.adjacency()
    comp = _sccs(adj)
    n_comp = max(comp, default=-1) + 1
    comp_adj: list[set[int]] = [set() for _ in range(n_comp)]
    for v, succ in enumerate(adj):
        for w in succ:
            if comp[v] != comp[w]:
                comp_adj[comp[v]].add(comp[w])
    # Tarjan 按逆拓扑序给分量编号：后继分量的编号更小
    reach: list[frozenset[int]] = []
    for c in range(n_comp):
        if not comp_adj[c]:
            reach.append(frozenset({c}))
        else:
            reach.append(frozenset().union(*(reach[d] for d in comp_adj[c])))
        if len(reach[c]) > 1:
            return Verdict.NO
    return Verdict.YES


def strongly_normalizing(graph: ReductionGraph) -> Verdict:
    """有环为 NO；无环但触顶为 UNKNOWN；否则 YES"""
    if _has_cycle(graph):
        return Verdict.NO
    if graph.cap_hit:
        return Verdict.UNKNOWN
    return Verdict.YES


def normal_forms(graph: ReductionGraph) -> list[Expr]:
    return graph.normal_forms()


def _subterm_keys(e: Expr) -> set[tuple]:
    return {alpha_key(node) for _, node in positions(e)}


def find_path(
    source: Expr,
    target: Expr,
    strategy: Strategy = NONDET,
    *,
    limits: Limits = DEFAULT_LIMITS,
    min_steps: int = 0,
    prune: bool = False,
    seed: int = 0,
) -> Optional[list[TraceStep]]:
    """
    广度优先搜索从 source 到 target（alpha 等价）的归约路径

    Args:
        min_steps: 路径至少包含的步数
        prune: 冻结那些子表达式已经在 target 中出现的可约式

    Returns:
        最短路径上的步骤；在上限内找不到时返回 None
    """
    goal = alpha_key(target)
    frozen = _subterm_keys(target) if prune else set()
    start = (alpha_key(source), 0)
    parents: dict[tuple, Optional[tuple[tuple, TraceStep]]] = {start: None}
    queue = deque([(source, 0, start)])
    while queue:
        current, depth, state = queue.popleft()
        if state[0] == goal and depth >= min_steps:
            path: list[TraceStep] = []
            while parents[state] is not None:
                state, last = parents[state]
                path.append(last)
            return list(reversed(path))
        if depth >= limits.path_depth or len(parents) >= limits.path_nodes:
            continue
        for redex in redexes(current, strategy):
            if frozen and alpha_key(subexpr_at(current, redex.path)) in frozen:
                continue
            reduct = step(current, redex, strategy, seed=seed)
            nxt = (alpha_key(reduct), min(depth + 1, min_steps))
            if nxt in parents:
                continue
            parents[nxt] = (state, TraceStep(redex, reduct))
            queue.append((reduct, depth + 1, nxt))
    return None

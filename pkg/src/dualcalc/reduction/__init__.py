"""归约：可约式、策略、多步归约、度量、并行归约与归约图"""

from .engine import (
    Pick,
    Trace,
    TraceSet,
    TraceStatus,
    TraceStep,
    normal_form,
    normalize,
    step,
    strategy_for_label,
)
from .graph import (
    CapHit,
    Edge,
    ReductionGraph,
    Verdict,
    build_graph,
    confluent,
    find_path,
    normal_forms,
    strongly_normalizing,
)
from .measures import degree, rank, size, weight
from .parallel import parallel_reduces, parallel_step
from .redex import Redex, contract, is_normal, redexes, rules_at
from .rules import (
    CBN,
    CBV,
    NONDET,
    NONDET_DC2,
    WEAK_CBN,
    WEAK_CBV,
    Mode,
    ReductionRule,
    RuleLabel,
    Strategy,
    StrategyKind,
    dual_rule,
)
from .values import is_covalue, is_value

__all__ = [
    "CBN",
    "CBV",
    "CapHit",
    "Edge",
    "Mode",
    "NONDET",
    "NONDET_DC2",
    "Pick",
    "Redex",
    "ReductionGraph",
    "ReductionRule",
    "RuleLabel",
    "Strategy",
    "StrategyKind",
    "Trace",
    "TraceSet",
    "TraceStatus",
    "TraceStep",
    "Verdict",
    "WEAK_CBN",
    "WEAK_CBV",
    "build_graph",
    "confluent",
    "contract",
    "degree",
    "dual_rule",
    "find_path",
    "is_covalue",
    "is_normal",
    "is_value",
    "normal_form",
    "normal_forms",
    "normalize",
    "parallel_reduces",
    "parallel_step",
    "rank",
    "redexes",
    "rules_at",
    "size",
    "step",
    "strategy_for_label",
    "strongly_normalizing",
    "weight",
]

"""二阶对偶演算 DC2"""

from .calculus import (
    check2,
    dual2,
    dual2_derivation,
    dual2_judgment,
    dual2_type,
    freshen_eigenvariables,
    graph2,
    normalize2,
    redexes2,
    step2,
    weaken,
)

__all__ = [
    "check2",
    "dual2",
    "dual2_derivation",
    "dual2_judgment",
    "dual2_type",
    "freshen_eigenvariables",
    "graph2",
    "normalize2",
    "redexes2",
    "step2",
    "weaken",
]

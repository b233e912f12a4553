"""二阶对称 λ 演算 Sλ2：dagger 翻译的目标"""

from .checker import check_sl, is_sl_typable
from .printer import show_mtype, show_sl
from .reduction import (
    SLRedex,
    SLRule,
    SLStep,
    SLTrace,
    normalize_sl,
    sl_redexes,
    sl_step,
    step_sl,
)
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
    sl_alpha_eq,
    sl_alpha_key,
    sl_free_vars,
    sl_size,
    sl_subst,
)
from .types import (
    BOTTOM,
    Bottom,
    ExistsT,
    ForallT,
    MNeg,
    MType,
    MVar,
    Prod,
    SLType,
    Sum,
    mfree_vars,
    msubst,
    mtype_eq,
    neg,
)

__all__ = [
    "App",
    "BOTTOM",
    "Bottom",
    "ExistsT",
    "ForallT",
    "Inj1",
    "Inj2",
    "Lam",
    "MNeg",
    "MType",
    "MVar",
    "Prod",
    "SLRedex",
    "SLRule",
    "SLStep",
    "SLTerm",
    "SLTrace",
    "SLType",
    "SPair",
    "SVar",
    "Sum",
    "TAbs",
    "TPack",
    "check_sl",
    "is_sl_typable",
    "mfree_vars",
    "msubst",
    "mtype_eq",
    "neg",
    "normalize_sl",
    "show_mtype",
    "show_sl",
    "sl_alpha_eq",
    "sl_alpha_key",
    "sl_free_vars",
    "sl_redexes",
    "sl_size",
    "sl_step",
    "sl_subst",
    "step_sl",
]

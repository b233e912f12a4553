"""语法层：类型、表达式、名字、遍历与打印"""

from .names import Name, NameSupply, Polarity, covar, var
from .printer import show_expr, show_type
from .terms import (
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
    NotElim,
    NotIntro,
    Out,
    Pair,
    Snd,
    Sort,
    Statement,
    Term,
    TyAbs,
    TyInst,
    TyPack,
    TyUnpack,
    Var,
)
from .traversal import (
    alpha_eq,
    alpha_key,
    children,
    free_covars,
    free_names,
    free_vars,
    positions,
    replace_at,
    subexpr_at,
    subst_coterm,
    subst_term,
    substitute,
    supply_for,
)
from .types import (
    And,
    Exists,
    Forall,
    Mu,
    NameSet,
    Not,
    Nu,
    Or,
    System,
    TypeExpr,
    TyVar,
    free_type_vars,
    implies,
    pos_neg,
    subst_type,
    type_alpha_eq,
    well_formed,
)

__all__ = [
    "Name",
    "NameSupply",
    "Polarity",
    "var",
    "covar",
    "show_expr",
    "show_type",
    "BindCo",
    "BindVar",
    "Case",
    "Coitr",
    "Coterm",
    "Covar",
    "Cut",
    "Expr",
    "Fst",
    "In",
    "Inl",
    "Inr",
    "Itr",
    "NotElim",
    "NotIntro",
    "Out",
    "Pair",
    "Snd",
    "Sort",
    "Statement",
    "Term",
    "TyAbs",
    "TyInst",
    "TyPack",
    "TyUnpack",
    "Var",
    "alpha_eq",
    "alpha_key",
    "children",
    "free_covars",
    "free_names",
    "free_vars",
    "positions",
    "replace_at",
    "subexpr_at",
    "subst_coterm",
    "subst_term",
    "substitute",
    "supply_for",
    "And",
    "Exists",
    "Forall",
    "Mu",
    "NameSet",
    "Not",
    "Nu",
    "Or",
    "System",
    "TypeExpr",
    "TyVar",
    "free_type_vars",
    "implies",
    "pos_neg",
    "subst_type",
    "type_alpha_eq",
    "well_formed",
]

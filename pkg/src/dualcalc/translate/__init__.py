"""三个翻译：DCμν → DC2、DC2 → Sλ2 以及 CBV → 弱 CBV"""

from .circledast import circledast
from .dagger import SLJudgment, dagger_expr, dagger_judgment, dagger_type
from .overline import overline_context, overline_expr, overline_judgment, overline_type

__all__ = [
    "SLJudgment",
    "circledast",
    "dagger_expr",
    "dagger_judgment",
    "dagger_type",
    "overline_context",
    "overline_expr",
    "overline_judgment",
    "overline_type",
]

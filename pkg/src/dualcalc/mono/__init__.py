"""度量 ‖C‖_X 与函子映射 mono"""

from .construct import MonoRequest, mono, mono_coterm, mono_request, mono_term
from .measure import measure

__all__ = ["MonoRequest", "measure", "mono", "mono_coterm", "mono_request", "mono_term"]

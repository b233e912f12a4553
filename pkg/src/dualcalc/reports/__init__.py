"""报告生成模块"""

from .generator import ReportGenerator

__all__ = ["ReportGenerator"]

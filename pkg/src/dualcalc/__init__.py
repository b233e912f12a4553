"""带归纳/余归纳类型的对偶演算"""

__version__ = "0.1.0"

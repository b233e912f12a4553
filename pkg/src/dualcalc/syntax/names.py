"""变量与余变量名字、确定性的新名字供给"""

from __future__ import annotations

import re
from dataclasses import dataclass
from enum import Enum
from typing import Iterable


class Polarity(str, Enum):
    VARIABLE = "variable"
    COVARIABLE = "covariable"

    def toggle(self) -> "Polarity":
        return Polarity.COVARIABLE if self is Polarity.VARIABLE else Polarity.VARIABLE


@dataclass(frozen=True, slots=True)
class Name:
    """带极性位的名字；对合 (−)′ 即翻转极性"""

    base: str
    polarity: Polarity = Polarity.VARIABLE

    @property
    def is_variable(self) -> bool:
        return self.polarity is Polarity.VARIABLE

    @property
    def is_covariable(self) -> bool:
        return self.polarity is Polarity.COVARIABLE

    def toggle(self) -> "Name":
        return Name(self.base, self.polarity.toggle())

    def __str__(self) -> str:
        return self.base if self.is_variable else f"'{self.base}"


def var(base: str) -> Name:
    return Name(base, Polarity.VARIABLE)


def covar(base: str) -> Name:
    return Name(base, Polarity.COVARIABLE)


_TRAILING_DIGITS = re.compile(r"\d+$")


class NameSupply:
    """
    确定性的新名字供给

    新名字为 “提示前缀 + 计数器”，计数器从 seed 开始；已登记的名字（无论极性）不会被再次分配。
    同一 seed、同一输入下，分配结果完全可复现。
    """

    def __init__(self, avoid: Iterable[str] = (), seed: int = 0):
        self._used: set[str] = set(avoid)
        self._seed = seed
        self._counters: dict[str, int] = {}

    def reserve(self, names: Iterable[object]) -> None:
        """登记已占用的名字（Name 或类型变量字符串）"""
        for name in names:
            self._used.add(name.base if isinstance(name, Name) else str(name))

    def _fresh_base(self, hint: str) -> str:
        stem = _TRAILING_DIGITS.sub("", hint) or "v"
        counter = self._counters.get(stem, self._seed)
        while True:
            counter += 1
            candidate = f"{stem}{counter}"
            if candidate not in self._used:
                break
        self._counters[stem] = counter
        self._used.add(candidate)
        return candidate

    def fresh_var(self, hint: str = "x") -> Name:
        return Name(self._fresh_base(hint), Polarity.VARIABLE)

    def fresh_covar(self, hint: str = "c") -> Name:
        return Name(self._fresh_base(hint), Polarity.COVARIABLE)

    def fresh_like(self, name: Name) -> Name:
        return Name(self._fresh_base(name.base), name.polarity)

    def fresh_type(self, hint: str = "Y") -> str:
        return self._fresh_base(hint)

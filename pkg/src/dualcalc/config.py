"""
运行限制配置

默认值可以被环境变量覆盖，命令行参数再覆盖环境变量。
"""

from __future__ import annotations

import os
from dataclasses import dataclass, replace
from typing import Mapping, Optional

ENV_FUEL = "DUALCALC_FUEL"
ENV_MAX_NODES = "DUALCALC_MAX_NODES"
ENV_MAX_DEPTH = "DUALCALC_MAX_DEPTH"


@dataclass(frozen=True)
class Limits:
    """
    归约与图探索的上限

    Args:
        fuel: 单条归约序列的最大步数
        max_nodes: 归约图的最大节点数
        max_depth: 归约图的最大深度
        max_traces: 枚举全部归约序列时的最大条数
        parallel_cap: 并行归约结果集合的最大元素数
        path_depth: 路径搜索的最大步数
        path_nodes: 路径搜索访问的最大节点数
    """

    fuel: int = 10_000
    max_nodes: int = 50_000
    max_depth: int = 200
    max_traces: int = 1_000
    parallel_cap: int = 20_000
    path_depth: int = 64
    path_nodes: int = 200_000

    @classmethod
    def from_env(cls, environ: Optional[Mapping[str, str]] = None) -> "Limits":
        """从环境变量读取；非法值忽略，保留默认值"""
        env = os.environ if environ is None else environ
        limits = cls()
        for key, field_name in (
            (ENV_FUEL, "fuel"),
            (ENV_MAX_NODES, "max_nodes"),
            (ENV_MAX_DEPTH, "max_depth"),
        ):
            value = _positive_int(env.get(key))
            if value is not None:
                limits = replace(limits, **{field_name: value})
        return limits

    def override(self, **values: Optional[int]) -> "Limits":
        """用非 None 的值覆盖（命令行参数）"""
        changes = {k: v for k, v in values.items() if v is not None}
        return replace(self, **changes) if changes else self


def _positive_int(raw: Optional[str]) -> Optional[int]:
    if raw is None:
        return None
    try:
        value = int(raw.strip())
    except ValueError:
        return None
    return value if value > 0 else None


DEFAULT_LIMITS = Limits()

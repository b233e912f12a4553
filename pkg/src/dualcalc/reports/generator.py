"""报告生成模块：归约序列、归约图与度量的表格输出"""

from __future__ import annotations

import json
import os
from typing import Dict, Optional

import pandas as pd

from ..reduction.engine import Trace
from ..reduction.graph import ReductionGraph, confluent, strongly_normalizing
from ..reduction.measures import degree, rank, size, weight
from ..reduction.rules import Mode, Strategy
from ..syntax.printer import show_expr
from ..syntax.terms import Expr

TRACE_COLUMNS = ["步骤", "规则", "位置", "大小", "权重", "秩", "表达式"]


def _path(path: tuple[int, ...]) -> str:
    return ".".join(map(str, path)) if path else "ε"


def _rank_mode(strategy: Optional[Strategy]) -> Mode:
    if strategy is not None and strategy.mode is Mode.NAME:
        return Mode.NAME
    return Mode.VALUE


class ReportGenerator:
    """报告生成器"""

    def __init__(self, output_dir: str = "reports"):
        """
        初始化报告生成器

        Args:
            output_dir: 输出目录
        """
        self.output_dir = output_dir
        os.makedirs(output_dir, exist_ok=True)
        self._visualizer = None

    @property
    def visualizer(self):
        # matplotlib 只在需要出图时加载
        if self._visualizer is None:
            from .visualizer import Visualizer

            self._visualizer = Visualizer(self.output_dir)
        return self._visualizer

    # ------------------------------------------------------------------ 表格

    def trace_frame(self, trace: Trace, strategy: Optional[Strategy] = None) -> pd.DataFrame:
        """
        归约序列 -> DataFrame

        第 0 行是起点（规则与位置为空），其后每一步一行；秩按策略取值调用或名调用版本。
        """
        mode = _rank_mode(strategy)
        rows = []
        for index, expr in enumerate(trace.exprs):
            redex = trace.steps[index - 1].redex if index > 0 else None
            rows.append(
                {
                    "步骤": index,
                    "规则": str(redex.label) if redex else "",
                    "位置": _path(redex.path) if redex else "",
                    "大小": size(expr),
                    "权重": weight(expr),
                    "秩": rank(expr, mode),
                    "表达式": show_expr(expr),
                }
            )
        return pd.DataFrame(rows, columns=TRACE_COLUMNS)

    def graph_frames(self, graph: ReductionGraph) -> tuple[pd.DataFrame, pd.DataFrame]:
        """归约图 -> (节点表, 边表)"""
        normal = set(graph.normal_form_indices())
        nodes = pd.DataFrame(
            {
                "编号": range(len(graph.nodes)),
                "深度": graph.depths,
                "已展开": graph.expanded,
                "正规形": [i in normal for i in range(len(graph.nodes))],
                "大小": [size(e) for e in graph.nodes],
                "表达式": [show_expr(e) for e in graph.nodes],
            }
        )
        edges = pd.DataFrame(
            {
                "起点": [edge.source for edge in graph.edges],
                "终点": [edge.target for edge in graph.edges],
                "规则": [str(edge.redex.label) for edge in graph.edges],
                "位置": [_path(edge.redex.path) for edge in graph.edges],
            },
            columns=["起点", "终点", "规则", "位置"],
        )
        return nodes, edges

    def measure_frame(self, exprs: Dict[str, Expr]) -> pd.DataFrame:
        """若干表达式的 |D|、‖D‖、deg(D) 与两种秩"""
        rows = []
        for name, expr in exprs.items():
            rows.append(
                {
                    "名称": name,
                    "大小": size(expr),
                    "权重": weight(expr),
                    "度": str(degree(expr)),
                    "秩(值调用)": rank(expr, Mode.VALUE),
                    "秩(名调用)": rank(expr, Mode.NAME),
                }
            )
        return pd.DataFrame(rows)

    def summarize_graph(self, graph: ReductionGraph) -> Dict[str, object]:
        """归约图摘要：节点、边、正规形与两个判定"""
        return {
            "strategy": str(graph.strategy),
            "nodes": len(graph.nodes),
            "edges": len(graph.edges),
            "normal_forms": [show_expr(e) for e in graph.normal_forms()],
            "confluent": confluent(graph).value,
            "strongly_normalizing": strongly_normalizing(graph).value,
            "cap_hit": {"nodes": graph.cap_hit.nodes, "depth": graph.cap_hit.depth},
            "max_depth": max(graph.depths, default=0),
        }

    # ------------------------------------------------------------------ 导出

    def export_to_csv(self, df: pd.DataFrame, filename: str) -> str:
        """
        导出 DataFrame 到 CSV

        Args:
            df: 数据
            filename: 输出文件名

        Returns:
            输出文件完整路径
        """
        output_path = os.path.join(self.output_dir, filename)

        df_export = df.copy()
        for col in df_export.columns:
            df_export[col] = df_export[col].fillna("")

        df_export.to_csv(
            output_path,
            index=False,
            encoding="utf-8-sig",
            quoting=1,  # QUOTE_ALL - 所有字段都加引号
            quotechar='"',
            doublequote=True,
        )
        return output_path

    def export_to_json(self, data: pd.DataFrame | Dict, filename: str) -> str:
        """DataFrame 按记录导出；字典原样导出"""
        output_path = os.path.join(self.output_dir, filename)
        if isinstance(data, pd.DataFrame):
            data.to_json(output_path, orient="records", force_ascii=False, indent=2)
        else:
            with open(output_path, "w", encoding="utf-8") as f:
                json.dump(data, f, ensure_ascii=False, indent=2)
        return output_path

    # ------------------------------------------------------------------ 汇总

    def generate_trace_reports(
        self,
        trace: Trace,
        strategy: Optional[Strategy] = None,
        name: str = "trace",
        charts: bool = True,
    ) -> Dict[str, str]:
        """
        生成一条归约序列的全部报告

        Returns:
            生成的报告文件路径字典
        """
        df = self.trace_frame(trace, strategy)
        reports = {
            "trace_csv": self.export_to_csv(df, f"{name}.csv"),
            "trace_json": self.export_to_json(df, f"{name}.json"),
        }
        if charts:
            chart = self.visualizer.plot_trace_measures(df, f"{name}_measures.png")
            if chart:
                reports["trace_chart"] = chart
        return reports

    def generate_graph_reports(
        self, graph: ReductionGraph, name: str = "graph", charts: bool = True
    ) -> Dict[str, str]:
        """生成归约图的节点表、边表、摘要与深度分布图"""
        nodes, edges = self.graph_frames(graph)
        reports = {
            "nodes_csv": self.export_to_csv(nodes, f"{name}_nodes.csv"),
            "edges_csv": self.export_to_csv(edges, f"{name}_edges.csv"),
            "summary_json": self.export_to_json(self.summarize_graph(graph), f"{name}.json"),
        }
        if charts:
            chart = self.visualizer.plot_graph_depths(nodes, f"{name}_depths.png")
            if chart:
                reports["depth_chart"] = chart
        return reports

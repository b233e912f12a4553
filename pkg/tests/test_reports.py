import json
import os

import pandas as pd

from dualcalc.parsers import parse_expr
from dualcalc.reduction import CBN, NONDET, build_graph, normalize
from dualcalc.reports import ReportGenerator
from dualcalc.reports.generator import TRACE_COLUMNS

CHOICE = "((x * 'c).'b * z.(y * 'c)).'c * 'a"


def test_trace_frame_starts_with_the_input(report_dir):
    generator = ReportGenerator(report_dir)
    trace = normalize(parse_expr("<x, y> * fst['a]"), NONDET)
    df = generator.trace_frame(trace)
    assert list(df.columns) == TRACE_COLUMNS
    assert len(df) == 2
    assert df.loc[0, "规则"] == ""
    assert df.loc[1, "规则"] == "β∧1"
    assert df.loc[1, "表达式"] == "x * 'a"


def test_trace_frame_uses_call_by_name_rank(report_dir):
    generator = ReportGenerator(report_dir)
    e = parse_expr("x * fst[[y.(y * 'a), 'b]]")
    df = generator.trace_frame(normalize(e, CBN), CBN)
    assert df.loc[0, "秩"] == 2


def test_graph_frames_and_summary(report_dir):
    generator = ReportGenerator(report_dir)
    graph = build_graph(parse_expr(CHOICE), NONDET)
    nodes, edges = generator.graph_frames(graph)
    assert len(nodes) == len(graph.nodes)
    assert nodes["正规形"].sum() == 2
    assert set(edges["规则"]) >= {"βR", "βL"}

    summary = generator.summarize_graph(graph)
    assert summary["confluent"] == "no"
    assert summary["strongly_normalizing"] == "yes"
    assert sorted(summary["normal_forms"]) == ["x * 'a", "y * 'a"]


def test_exported_files(report_dir):
    generator = ReportGenerator(report_dir)
    graph = build_graph(parse_expr(CHOICE), NONDET)
    paths = generator.generate_graph_reports(graph, charts=False)
    assert set(paths) == {"nodes_csv", "edges_csv", "summary_json"}

    nodes = pd.read_csv(paths["nodes_csv"], encoding="utf-8-sig")
    assert len(nodes) == len(graph.nodes)
    with open(paths["summary_json"], encoding="utf-8") as f:
        assert json.load(f)["nodes"] == len(graph.nodes)


def test_trace_reports_without_charts(report_dir):
    generator = ReportGenerator(report_dir)
    trace = normalize(parse_expr(CHOICE), NONDET)
    paths = generator.generate_trace_reports(trace, NONDET, name="choice", charts=False)
    assert os.path.basename(paths["trace_csv"]) == "choice.csv"
    with open(paths["trace_json"], encoding="utf-8") as f:
        records = json.load(f)
    assert records[-1]["表达式"] == "x * 'a"


def test_charts_are_written(report_dir):
    generator = ReportGenerator(report_dir)
    trace = normalize(parse_expr(CHOICE), NONDET)
    paths = generator.generate_trace_reports(trace, NONDET)
    assert os.path.exists(paths["trace_chart"])

    frame = generator.measure_frame({"a": parse_expr("x * 'a"), "b": parse_expr(CHOICE)})
    assert list(frame["大小"]) == [1, 7]
    assert os.path.exists(generator.visualizer.plot_measure_comparison(frame))

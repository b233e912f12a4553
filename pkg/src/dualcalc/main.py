"""主程序入口"""

from __future__ import annotations

import argparse
import io
import json
import sys
from typing import Any, Optional, Union

# 修复 Windows 控制台编码问题
if sys.platform == "win32":
    sys.stdout = io.TextIOWrapper(sys.stdout.buffer, encoding="utf-8", errors="replace")
    sys.stderr = io.TextIOWrapper(sys.stderr.buffer, encoding="utf-8", errors="replace")

from dualcalc import __version__
from dualcalc.config import Limits
from dualcalc.duality import dual_expr, dual_judgment, dual_type
from dualcalc.errors import (
    DefinitionError,
    DualCalcError,
    DualCalcSyntaxError,
    IllFormedType,
    JudgmentError,
    TypeCheckError,
)
from dualcalc.mono import measure, mono, mono_request
from dualcalc.parsers import (
    SourceFile,
    infer_system,
    load_prelude,
    load_source,
    parse_expr,
    parse_judgment,
    parse_type,
)
from dualcalc.reduction import (
    CBV,
    Mode,
    Pick,
    ReductionGraph,
    Strategy,
    StrategyKind,
    Trace,
    TraceSet,
    TraceStatus,
    Verdict,
    build_graph,
    confluent,
    degree,
    find_path,
    normalize,
    rank,
    size,
    strongly_normalizing,
    weight,
)
from dualcalc.slambda2 import show_mtype, show_sl
from dualcalc.stdlib import STDLIB, stdlib_entry
from dualcalc.syntax import Name, covar, show_expr, show_type, var
from dualcalc.syntax.terms import Expr
from dualcalc.syntax.types import System, TypeExpr
from dualcalc.translate import (
    SLJudgment,
    circledast,
    dagger_expr,
    dagger_judgment,
    overline_expr,
    overline_judgment,
)
from dualcalc.typecheck import Judgment, TypeChecker, elaborate

EXIT_OK = 0
EXIT_FAILURE = 1
EXIT_USAGE = 2

STRATEGIES = [kind.value for kind in StrategyKind]

Parsed = Union[Judgment, Expr, TypeExpr]


class UsageError(Exception):
    """命令行参数组合不合法"""


def _trace_json(trace: Trace) -> dict[str, Any]:
    return {
        "start": show_expr(trace.start),
        "status": trace.status.value,
        "steps": [
            {"rule": str(s.redex.label), "path": list(s.redex.path), "expr": show_expr(s.expr)}
            for s in trace.steps
        ],
        "final": show_expr(trace.final),
    }


def _sl_judgment_text(j: SLJudgment) -> str:
    context = ", ".join(f"{name} : {show_mtype(t)}" for name, t in j.context.items())
    return f"{context} ⊢ {show_sl(j.term)} : {show_mtype(j.type)}".strip()


class DualCalcApp:
    """对偶演算命令行工具"""

    def __init__(
        self,
        *,
        seed: int = 0,
        quiet: bool = False,
        as_json: bool = False,
        strict: bool = False,
        infer: bool = False,
        limits: Optional[Limits] = None,
        source: Optional[SourceFile] = None,
        report_dir: Optional[str] = None,
    ):
        """
        初始化命令行工具

        Args:
            seed: 新名字供给的起点
            quiet: 只输出结果
            as_json: 以 JSON 输出结果（隐含 quiet）
            strict: 归约燃料耗尽或判定未知时以失败退出
            infer: 检查时用合一求解缺少的切割类型
            limits: 运行上限
            source: 可被引用的定义（前奏与源文件）
            report_dir: 报告输出目录（None 表示不生成报告）
        """
        self.seed = seed
        self.as_json = as_json
        self.quiet = quiet or as_json
        self.strict = strict
        self.infer = infer
        self.limits = limits or Limits.from_env()
        self.source = source
        self.report_dir = report_dir

    # ------------------------------------------------------------------ 输出

    def banner(self, title: str):
        if self.quiet:
            return
        print("=" * 60)
        print(title)
        print("=" * 60)

    def phase(self, index: int, total: int, text: str):
        if not self.quiet:
            print(f"\n[{index}/{total}] 正在{text}...")

    def ok(self, text: str):
        if not self.quiet:
            print(f"   ✓ {text}")

    def detail(self, text: str):
        if not self.quiet:
            print(f"   → {text}")

    def warn(self, text: str):
        if not self.as_json:
            print(f"⚠ {text}")

    def fail(self, text: str):
        if not self.as_json:
            print(f"✗ {text}")

    def result(self, text: str):
        print(text)

    def emit_json(self, data: dict[str, Any]):
        print(json.dumps(data, ensure_ascii=False, indent=2))

    # ------------------------------------------------------------------ 输入

    def read_expr(self, text: Optional[str], name: Optional[str] = None) -> Expr:
        """命令行表达式或 --name 指定的定义；引用的定义会被展开"""
        if name is not None:
            return self._named(name).principal
        if text is None:
            raise UsageError("需要输入表达式或 --name")
        expr = parse_expr(text)
        return self.source.expand(expr) if self.source else expr

    def read_judgment(self, text: Optional[str], name: Optional[str] = None) -> Judgment:
        if name is not None:
            return self._named(name)
        if text is None:
            raise UsageError("需要输入判断或 --name")
        judgment = parse_judgment(text)
        return self.source.expand_judgment(judgment) if self.source else judgment

    def read_any(self, text: Optional[str], name: Optional[str] = None) -> Parsed:
        """判断（含 |-）、表达式或类型，按这个顺序尝试"""
        if name is not None:
            return self._named(name)
        if text is None:
            raise UsageError("需要输入或 --name")
        if "|-" in text:
            return self.read_judgment(text)
        try:
            return self.read_expr(text)
        except DualCalcSyntaxError as expr_error:
            try:
                t = parse_type(text)
            except DualCalcSyntaxError:
                raise expr_error from None
            return self.source.expand_type(t) if self.source else t

    def _named(self, name: str) -> Judgment:
        if self.source is None:
            raise UsageError("--name 需要 --prelude 或 --file")
        return self.source.judgment(name)

    def strategy(self, name: str, expr: Expr, eta_or: bool = False) -> Strategy:
        system = infer_system(expr)
        try:
            return Strategy(StrategyKind(name), system, eta_or)
        except ValueError as e:
            raise UsageError(str(e)) from None

    def _report_generator(self):
        from dualcalc.reports import ReportGenerator

        return ReportGenerator(self.report_dir)

    # ------------------------------------------------------------------ 命令

    def check(
        self,
        text: Optional[str],
        name: Optional[str] = None,
        show_derivation: bool = False,
        show_elaborated: bool = False,
        validate: bool = False,
    ) -> int:
        """检查判断"""
        self.banner("类型检查")
        self.phase(1, 2, "解析判断")
        judgment = self.read_judgment(text, name)
        self.ok(f"系统: {judgment.system.value}")
        self.detail(str(judgment))

        self.phase(2, 2, "检查推导")
        try:
            derivation = TypeChecker(infer=self.infer).check(judgment)
        except (TypeCheckError, IllFormedType) as e:
            if self.as_json:
                self.emit_json({"judgment": str(judgment), "typable": False, "error": e.to_dict()})
            else:
                self.fail(f"判断不成立: {e.message}")
            return EXIT_FAILURE

        problems = derivation.validate() if validate else []
        if self.as_json:
            self.emit_json(
                {
                    "judgment": str(judgment),
                    "system": judgment.system.value,
                    "typable": True,
                    "derivation_size": derivation.size,
                    "rules": [str(r) for r in derivation.rules()],
                    "problems": problems,
                    "elaborated": show_expr(elaborate(derivation)),
                }
            )
            return EXIT_FAILURE if problems else EXIT_OK

        self.ok(f"推导树共 {derivation.size} 个节点")
        self.result(f"✓ 判断成立: {judgment}")
        if show_derivation:
            self.result(derivation.render())
        if show_elaborated:
            self.result(show_expr(elaborate(derivation)))
        for problem in problems:
            self.fail(f"推导复核失败: {problem}")
        return EXIT_FAILURE if problems else EXIT_OK

    def reduce(
        self,
        text: Optional[str],
        name: Optional[str] = None,
        strategy_name: str = "nd",
        fuel: Optional[int] = None,
        trace: bool = False,
        all_traces: bool = False,
        eta_or: bool = False,
    ) -> int:
        """多步归约"""
        expr = self.read_expr(text, name)
        strategy = self.strategy(strategy_name, expr, eta_or)
        total = 3 if self.report_dir else 2
        self.banner(f"归约 ({strategy})")
        self.phase(1, total, "解析表达式")
        self.detail(show_expr(expr))

        self.phase(2, total, "归约")
        pick = Pick.ALL if all_traces else Pick.LEFTMOST
        outcome = normalize(expr, strategy, fuel, pick, limits=self.limits, seed=self.seed)
        traces = outcome.traces if isinstance(outcome, TraceSet) else [outcome]
        exhausted = any(t.status is TraceStatus.FUEL_EXHAUSTED for t in traces)
        cap_hit = isinstance(outcome, TraceSet) and outcome.cap_hit

        if self.as_json:
            self.emit_json(
                {
                    "strategy": str(strategy),
                    "traces": [_trace_json(t) for t in traces],
                    "normal_forms": self._distinct_finals(traces),
                    "cap_hit": cap_hit,
                }
            )
        else:
            self.ok(f"共 {len(traces)} 条归约序列")
            for index, t in enumerate(traces, 1):
                if trace:
                    if len(traces) > 1:
                        self.result(f"# 序列 {index}")
                    self.result(show_expr(t.start))
                    for s in t.steps:
                        self.result(f"--[{s.redex}]--> {show_expr(s.expr)}")
                if t.status is TraceStatus.FUEL_EXHAUSTED:
                    self.warn(f"燃料耗尽（{len(t)} 步后仍有可约式）")
            for final in self._distinct_finals(traces):
                self.result(final)
            if cap_hit:
                self.warn(f"归约序列超过上限 {self.limits.max_traces}，只枚举了一部分")

        if self.report_dir:
            self.phase(3, total, "生成报告")
            generator = self._report_generator()
            for index, t in enumerate(traces):
                paths = generator.generate_trace_reports(t, strategy, name=f"trace_{index}")
                for kind, path in paths.items():
                    self.detail(f"{kind}: {path}")
        if exhausted and self.strict:
            return EXIT_FAILURE
        return EXIT_OK

    @staticmethod
    def _distinct_finals(traces: list[Trace]) -> list[str]:
        seen: list[str] = []
        for t in traces:
            text = show_expr(t.final)
            if text not in seen:
                seen.append(text)
        return seen

    def graph(
        self,
        text: Optional[str],
        name: Optional[str] = None,
        strategy_name: str = "nd",
        check_confluence: bool = False,
        check_sn: bool = False,
        eta_or: bool = False,
    ) -> int:
        """构造归约图并判定合流性与强正规化"""
        expr = self.read_expr(text, name)
        strategy = self.strategy(strategy_name, expr, eta_or)
        total = 3 if self.report_dir else 2
        self.banner(f"归约图 ({strategy})")
        self.phase(1, total, "构造归约图")
        graph = build_graph(expr, strategy, limits=self.limits, seed=self.seed)
        self.ok(f"{len(graph.nodes)} 个节点, {len(graph.edges)} 条边")
        if graph.cap_hit:
            self.warn("归约图触顶（节点数或深度上限），判定可能为 unknown")

        self.phase(2, total, "判定")
        verdicts: dict[str, Verdict] = {}
        if check_confluence:
            verdicts["confluent"] = confluent(graph)
        if check_sn:
            verdicts["strongly_normalizing"] = strongly_normalizing(graph)
        self._print_graph(graph, verdicts)

        if self.report_dir:
            self.phase(3, total, "生成报告")
            for kind, path in self._report_generator().generate_graph_reports(graph).items():
                self.detail(f"{kind}: {path}")

        if any(v is Verdict.NO for v in verdicts.values()):
            return EXIT_FAILURE
        if self.strict and any(v is Verdict.UNKNOWN for v in verdicts.values()):
            return EXIT_FAILURE
        return EXIT_OK

    def _print_graph(self, graph: ReductionGraph, verdicts: dict[str, Verdict]):
        normal = [show_expr(e) for e in graph.normal_forms()]
        if self.as_json:
            self.emit_json(
                {
                    "strategy": str(graph.strategy),
                    "nodes": len(graph.nodes),
                    "edges": len(graph.edges),
                    "normal_forms": normal,
                    "cap_hit": {"nodes": graph.cap_hit.nodes, "depth": graph.cap_hit.depth},
                    **{key: v.value for key, v in verdicts.items()},
                }
            )
            return
        self.result(f"节点: {len(graph.nodes)}  边: {len(graph.edges)}  正规形: {len(normal)}")
        for text in normal:
            self.result(f"  {text}")
        labels = {"confluent": "合流", "strongly_normalizing": "强正规化"}
        for key, verdict in verdicts.items():
            self.result(f"{labels[key]}: {verdict.value}")

    def dual(self, text: Optional[str], name: Optional[str] = None) -> int:
        """对偶变换"""
        parsed = self.read_any(text, name)
        if isinstance(parsed, Judgment):
            output = str(dual_judgment(parsed))
        elif isinstance(parsed, TypeExpr):
            output = show_type(dual_type(parsed))
        else:
            output = show_expr(dual_expr(parsed))
        if self.as_json:
            self.emit_json({"input": self._show(parsed), "dual": output})
        else:
            self.result(output)
        return EXIT_OK

    @staticmethod
    def _show(parsed: Parsed) -> str:
        if isinstance(parsed, Judgment):
            return str(parsed)
        if isinstance(parsed, TypeExpr):
            return show_type(parsed)
        return show_expr(parsed)

    def translate(
        self,
        text: Optional[str],
        name: Optional[str] = None,
        target: str = "dc2",
        check: bool = False,
    ) -> int:
        """DCμν → DC2（overline），DC2 → Sλ2（dagger）；DCμν 到 Sλ2 先经过 DC2"""
        parsed = self.read_any(text, name)
        if isinstance(parsed, TypeExpr):
            raise UsageError("translate 需要表达式或判断")
        total = 2 if check else 1
        self.banner(f"翻译到 {target}")
        self.phase(1, total, "翻译")

        if isinstance(parsed, Judgment):
            image = parsed
            if parsed.system is not System.DC2:
                image = overline_judgment(parsed, seed=self.seed)
                self.ok("DCμν → DC2")
            if target == "sl2":
                sl = dagger_judgment(image)
                self.ok("DC2 → Sλ2")
                output = _sl_judgment_text(sl)
            else:
                output = str(image)
        else:
            expr = parsed
            if infer_system(expr) is not System.DC2:
                expr = overline_expr(expr, seed=self.seed)
            output = show_sl(dagger_expr(expr)) if target == "sl2" else show_expr(expr)
            image = None

        verdict: Optional[bool] = None
        if check:
            self.phase(2, total, "检查译文的类型")
            if not isinstance(parsed, Judgment) or image is None:
                raise UsageError("--check 需要判断输入")
            verdict = self._check_image(image, target)
            (self.ok if verdict else self.warn)(f"译文{'可' if verdict else '不可'}定型")

        if self.as_json:
            self.emit_json({"target": target, "output": output, "typable": verdict})
        else:
            self.result(output)
        return EXIT_FAILURE if verdict is False else EXIT_OK

    def _check_image(self, image: Judgment, target: str) -> bool:
        if target == "sl2":
            return dagger_judgment(image).is_typable()
        try:
            TypeChecker(infer=self.infer).check(image)
        except (TypeCheckError, IllFormedType) as e:
            self.detail(e.message)
            return False
        return True

    def desugar_cbv(
        self, text: Optional[str], name: Optional[str] = None, verify: bool = False
    ) -> int:
        """值调用到弱值调用的变换 (−)⊛"""
        expr = self.read_expr(text, name)
        image = circledast(expr, seed=self.seed)
        steps: Optional[int] = None
        if verify:
            path = find_path(expr, image, CBV, limits=self.limits, seed=self.seed)
            if path is None:
                self.warn("在上限内没有找到 D →*CBV D⊛ 的路径")
            else:
                steps = len(path)
                self.ok(f"D →*CBV D⊛，共 {steps} 步")
        if self.as_json:
            self.emit_json({"input": show_expr(expr), "output": show_expr(image), "steps": steps})
        else:
            self.result(show_expr(image))
        if verify and steps is None and self.strict:
            return EXIT_FAILURE
        return EXIT_OK

    def mono(
        self,
        x: str,
        context: str,
        domain: str,
        codomain: str,
        binder: str,
        body: str,
        argument: str,
    ) -> int:
        """展开一次 mono 请求"""
        c, a, b = (self._type(t) for t in (context, domain, codomain))
        bound: Name = covar(binder[1:]) if binder.startswith("'") else var(binder)
        body_expr = self.read_expr(body)
        argument_expr = self.read_expr(argument)
        request = mono_request(x, c, a, b, bound, body_expr, argument_expr)
        image = mono(request)
        norm = measure(c, x)
        if self.as_json:
            self.emit_json({"output": show_expr(image), "measure": norm})
        else:
            self.detail(f"‖{show_type(c)}‖_{x} = {norm}")
            self.result(show_expr(image))
        return EXIT_OK

    def _type(self, text: str) -> TypeExpr:
        t = parse_type(text)
        return self.source.expand_type(t) if self.source else t

    def measure(self, text: Optional[str], name: Optional[str] = None) -> int:
        """|D|、‖D‖、deg(D) 与两种秩"""
        expr = self.read_expr(text, name)
        values = {
            "size": size(expr),
            "weight": weight(expr),
            "degree": list(degree(expr)),
            "rank_v": rank(expr, Mode.VALUE),
            "rank_n": rank(expr, Mode.NAME),
        }
        if self.report_dir:
            generator = self._report_generator()
            frame = generator.measure_frame({"D": expr})
            self.detail(f"measures_csv: {generator.export_to_csv(frame, 'measures.csv')}")
            chart = generator.visualizer.plot_measure_comparison(frame)
            self.detail(f"measures_chart: {chart}")
        if self.as_json:
            self.emit_json({"expr": show_expr(expr), **values})
            return EXIT_OK
        self.result(f"|D| = {values['size']}")
        self.result(f"‖D‖ = {values['weight']}")
        self.result(f"deg(D) = ({values['degree'][0]}, {values['degree'][1]})")
        self.result(f"r(D) = {values['rank_v']}  (名调用: {values['rank_n']})")
        return EXIT_OK

    def stdlib(self, name: Optional[str] = None, n: int = 2, check: bool = False) -> int:
        """列出或输出标准库条目"""
        if name is None:
            self.banner("标准库")
            for entry in STDLIB.values():
                self.result(f"{entry.name:<14} {entry.description}")
            if self.source is not None:
                self.result("")
                for definition in self.source:
                    self.result(f"{definition.name:<14} ({definition.kind.value})")
            return EXIT_OK

        judgment = stdlib_entry(name).build(n)
        verdict: Optional[bool] = None
        if check:
            try:
                TypeChecker(infer=self.infer).check(judgment)
                verdict = True
            except (TypeCheckError, IllFormedType) as e:
                self.fail(f"判断不成立: {e.message}")
                verdict = False
        if self.as_json:
            self.emit_json({"name": name, "judgment": str(judgment), "typable": verdict})
        else:
            self.result(str(judgment))
            if verdict:
                self.ok("判断成立")
        return EXIT_FAILURE if verdict is False else EXIT_OK


def _add_output_options(parser: argparse.ArgumentParser, default):
    parser.add_argument("--seed", type=int, default=default(0), help="新名字供给的起点（默认: 0）")
    parser.add_argument("--quiet", "-q", action="store_true", default=default(False), help="只输出结果")
    parser.add_argument("--json", action="store_true", default=default(False), help="以 JSON 输出结果")


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    # 子命令之后的同名选项只在显式给出时覆盖主命令上的值
    _add_output_options(common, lambda _: argparse.SUPPRESS)
    common.add_argument(
        "--strict",
        action="store_true",
        help="燃料耗尽或判定未知时以 1 退出",
    )
    common.add_argument(
        "--infer",
        action="store_true",
        help="类型检查时用合一求解缺少的切割类型（默认: 缺少时报错）",
    )
    common.add_argument("--prelude", action="store_true", help="可以引用标准前奏中的定义")
    common.add_argument("--file", "-f", default=None, help="可以引用源文件 (.dc) 中的定义")
    common.add_argument("--name", default=None, help="使用源文件中的定义代替输入")
    common.add_argument("--report-dir", default=None, help="报告输出目录（CSV/JSON/PNG）")
    common.add_argument("--fuel", type=int, default=None, help="单条归约序列的最大步数")
    common.add_argument("--max-nodes", type=int, default=None, help="归约图的最大节点数")
    common.add_argument("--max-depth", type=int, default=None, help="归约图的最大深度")
    return common


def build_parser() -> argparse.ArgumentParser:
    common = _common_parser()
    parser = argparse.ArgumentParser(
        prog="dualcalc",
        description="对偶演算 DCμν 工具：类型检查、归约、对偶与翻译",
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
示例:
  %(prog)s check "x : A |- | x : A"
  %(prog)s check --infer --elaborate --prelude --name choice
  %(prog)s reduce --strategy nd --all --prelude --name pick
  %(prog)s reduce --strategy cbv --trace "<x, y> * fst['a]"
  %(prog)s dual --prelude --name zero
  %(prog)s translate --target sl2 "x : A |- | <x>inl{A \\/ A} : A \\/ A"
  %(prog)s stdlib zero --check
        """,
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    _add_output_options(parser, lambda value: value)
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("check", parents=[common], help="检查判断")
    p.add_argument("input", nargs="?", help="判断，例如 \"x : A |- | x : A\"")
    p.add_argument("--derivation", action="store_true", help="输出推导树")
    p.add_argument("--elaborate", action="store_true", help="输出回填注解后的表达式")
    p.add_argument("--validate", action="store_true", help="逐节点复核推导树")

    for command, help_text in (("reduce", "多步归约"), ("graph", "构造归约图")):
        p = sub.add_parser(command, parents=[common], help=help_text)
        p.add_argument("input", nargs="?", help="表达式")
        p.add_argument("--strategy", "-s", choices=STRATEGIES, default="nd", help="归约策略")
        p.add_argument("--eta-or", action="store_true", help="启用假设性的 (η∨)/(η∧) 规则")
        if command == "reduce":
            p.add_argument("--trace", "-t", action="store_true", help="逐步输出归约序列")
            p.add_argument("--all", action="store_true", help="枚举全部极大归约序列")
        else:
            p.add_argument("--confluence", action="store_true", help="判定合流性")
            p.add_argument("--sn", action="store_true", help="判定强正规化")

    p = sub.add_parser("dual", parents=[common], help="对偶变换（类型、表达式或判断）")
    p.add_argument("input", nargs="?")

    p = sub.add_parser("translate", parents=[common], help="翻译到 DC2 或 Sλ2")
    p.add_argument("input", nargs="?")
    p.add_argument("--target", choices=["dc2", "sl2"], default="dc2")
    p.add_argument("--check", action="store_true", help="检查译文的类型（需要判断输入）")

    p = sub.add_parser("desugar-cbv", parents=[common], help="值调用到弱值调用的变换")
    p.add_argument("input", nargs="?")
    p.add_argument("--verify", action="store_true", help="搜索 D →*CBV D⊛ 的路径")

    p = sub.add_parser("mono", parents=[common], help="展开 mono^{X.C}_{A,B,x.M}{N}")
    p.add_argument("--var", required=True, help="类型变量 X")
    p.add_argument("--context", required=True, help="类型 C")
    p.add_argument("--domain", required=True, help="类型 A")
    p.add_argument("--codomain", required=True, help="类型 B")
    p.add_argument("--binder", required=True, help="变量 x 或余变量 'a")
    p.add_argument("--body", required=True, help="项 M 或余项 K")
    p.add_argument("--argument", required=True, help="项 N 或余项 L")

    p = sub.add_parser("measure", parents=[common], help="计算 |D|、‖D‖、deg 与秩")
    p.add_argument("input", nargs="?")

    p = sub.add_parser("stdlib", parents=[common], help="列出或输出标准库条目")
    p.add_argument("entry", nargs="?", help="条目名（省略时列出全部）")
    p.add_argument("--n", type=int, default=2, help="numeral 与 tl 的参数（默认: 2）")
    p.add_argument("--check", action="store_true", help="检查条目的判断")
    return parser


def _load_source(args: argparse.Namespace) -> Optional[SourceFile]:
    source = load_prelude() if args.prelude else None
    if args.file:
        loaded = load_source(args.file)
        source = source.merged(loaded) if source else loaded
    return source


def run(args: argparse.Namespace) -> int:
    limits = Limits.from_env().override(
        fuel=args.fuel, max_nodes=args.max_nodes, max_depth=args.max_depth
    )
    app = DualCalcApp(
        seed=args.seed,
        quiet=args.quiet,
        as_json=args.json,
        strict=args.strict,
        infer=args.infer,
        limits=limits,
        source=_load_source(args),
        report_dir=args.report_dir,
    )
    command = args.command
    if command == "check":
        return app.check(args.input, args.name, args.derivation, args.elaborate, args.validate)
    if command == "reduce":
        return app.reduce(
            args.input, args.name, args.strategy, args.fuel, args.trace, args.all, args.eta_or
        )
    if command == "graph":
        return app.graph(
            args.input, args.name, args.strategy, args.confluence, args.sn, args.eta_or
        )
    if command == "dual":
        return app.dual(args.input, args.name)
    if command == "translate":
        return app.translate(args.input, args.name, args.target, args.check)
    if command == "desugar-cbv":
        return app.desugar_cbv(args.input, args.name, args.verify)
    if command == "mono":
        return app.mono(
            args.var,
            args.context,
            args.domain,
            args.codomain,
            args.binder,
            args.body,
            args.argument,
        )
    if command == "measure":
        return app.measure(args.input, args.name)
    return app.stdlib(args.entry, args.n, args.check)


def main(argv: Optional[list[str]] = None) -> int:
    """主函数"""
    parser = build_parser()
    args = parser.parse_args(argv)
    as_json = getattr(args, "json", False)

    def report(e: Exception, message: str, code: int) -> int:
        if as_json:
            payload = e.to_dict() if isinstance(e, DualCalcError) else {"code": "usage"}
            print(json.dumps({"error": {**payload, "message": message}}, ensure_ascii=False))
        else:
            print(f"✗ {message}")
        return code

    try:
        return run(args)
    except (DualCalcSyntaxError, DefinitionError, JudgmentError) as e:
        return report(e, e.message, EXIT_USAGE)
    except (UsageError, FileNotFoundError) as e:
        return report(e, str(e), EXIT_USAGE)
    except (TypeCheckError, IllFormedType) as e:
        return report(e, e.message, EXIT_FAILURE)
    except DualCalcError as e:
        return report(e, e.message, EXIT_FAILURE)
    except Exception as e:
        print(f"\n✗ 发生错误: {e}")
        import traceback

        traceback.print_exc()
        return EXIT_FAILURE


if __name__ == "__main__":
    sys.exit(main())

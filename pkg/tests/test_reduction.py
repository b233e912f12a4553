import pytest
from hypothesis import given

from dualcalc.config import Limits
from dualcalc.errors import InvalidRedex
from dualcalc.parsers import parse_expr
from dualcalc.reduction import (
    CBN,
    CBV,
    NONDET,
    WEAK_CBV,
    Mode,
    Pick,
    Redex,
    ReductionRule,
    RuleLabel,
    Strategy,
    StrategyKind,
    TraceSet,
    TraceStatus,
    Verdict,
    build_graph,
    confluent,
    degree,
    find_path,
    is_normal,
    normal_form,
    normalize,
    parallel_reduces,
    parallel_step,
    rank,
    redexes,
    size,
    step,
    strongly_normalizing,
    weight,
)
from dualcalc.stdlib import (
    IMPLICATION_BETA_RULES,
    NAT,
    apply_to,
    cons_list,
    identity,
    insert,
    nil,
    numeral,
    stdlib_judgment,
    stream,
    tl_n,
)
from dualcalc.syntax import (
    Covar,
    Cut,
    In,
    Mu,
    Not,
    Or,
    TyVar,
    Var,
    alpha_eq,
    alpha_key,
    covar,
    positions,
    show_expr,
    var,
)
from dualcalc.syntax.types import System

from .strategies import typed_judgments, untyped_exprs

X, A = TyVar("X"), TyVar("A")
SMALL = Limits(max_nodes=5_000, max_depth=60)


def _choice_statement():
    return parse_expr("((x * 'c).'b * z.(y * 'c)).'c * 'a")


def _normal_forms(graph):
    return sorted(show_expr(e) for e in graph.normal_forms())


class TestMeasures:
    def test_size_ignores_names(self):
        assert size(parse_expr("x")) == 0
        assert size(parse_expr("<x, y> * fst['a]")) == 3

    def test_degree_of_folded_identity(self):
        # in^{μX.¬X∨X}⟨λx.x⟩：‖¬X∨X‖_X + 1 = 5，构造子共 8 个
        e = In(Mu("X", Or(Not(X), X)), identity(var("x")))
        assert degree(e) == (5, 8)

    def test_weight_takes_the_maximum_over_children(self):
        e = parse_expr("<in{mu X. A \\/ X}<<x>inl>, y>")
        assert weight(e) == weight(parse_expr("in{mu X. A \\/ X}<<x>inl>"))
        assert weight(e) == 2 + 1

    def test_call_by_name_rank_is_rank_of_dual(self):
        e = parse_expr("x * fst[[y.(y * 'a), 'b]]")
        assert rank(e, Mode.VALUE) == 0
        assert rank(e, Mode.NAME) == 2


class TestStrategies:
    def test_dc2_only_has_nondeterministic_reduction(self):
        with pytest.raises(ValueError):
            Strategy(StrategyKind.CBV, System.DC2)

    def test_strategy_duals(self):
        assert CBV.dual() == CBN
        assert WEAK_CBV.dual().kind is StrategyKind.WEAK_CBN
        assert NONDET.dual() == NONDET

    def test_labels_carry_the_strategy_subscript(self):
        assert str(RuleLabel(ReductionRule.BETA_R, Mode.VALUE)) == "βR_v"
        assert str(RuleLabel(ReductionRule.BETA_MU).dual()) == "βν"

    def test_sigma_rules_only_in_full_strategies(self):
        e = parse_expr("<(x * 'b).'a>inl * 'b")
        assert [r.rule for r in redexes(e, CBV)] == [ReductionRule.SIGMA_OR1]
        assert redexes(e, WEAK_CBV) == []
        assert redexes(e, NONDET) == []

    def test_eta_or_needs_the_flag(self):
        e = parse_expr("x * [y.(<y>inl * 'a), z.(<z>inr * 'a)]")
        assert not any(r.rule is ReductionRule.ETA_OR for r in redexes(e, NONDET))
        flagged = Strategy(eta_or=True)
        assert ReductionRule.ETA_OR in [r.rule for r in redexes(e, flagged)]


class TestSteps:
    def test_invalid_redex(self):
        e = parse_expr("x * 'a")
        with pytest.raises(InvalidRedex):
            step(e, Redex((), RuleLabel(ReductionRule.BETA_R)), NONDET)

    def test_implication_beta_is_five_steps(self):
        e = apply_to(identity(var("x")), Var(var("n")), Covar(covar("k")))
        trace = normalize(e, CBV)
        assert [s.redex.rule for s in trace.steps] == list(IMPLICATION_BETA_RULES)
        assert alpha_eq(trace.final, parse_expr("n * 'k"))

    def test_fuel_exhaustion(self):
        loop = parse_expr("[x.(x * not<x>)]not * not<[x.(x * not<x>)]not>")
        trace = normalize(loop, NONDET, fuel=5)
        assert trace.status is TraceStatus.FUEL_EXHAUSTED
        assert len(trace) == 5

    def test_fuel_must_be_positive(self):
        with pytest.raises(ValueError):
            normalize(parse_expr("x * 'a"), NONDET, fuel=0)

    def test_parallel_step_contracts_existing_redexes_only(self):
        e = parse_expr("(<x, y> * 'a).'a * fst['c]")
        assert parallel_reduces(e, e)
        assert parallel_reduces(e, parse_expr("<x, y> * fst['c]"))
        assert not parallel_reduces(e, parse_expr("x * 'c"))
        e = parse_expr("<x, y> * z.(z * fst['b])")
        assert parallel_reduces(e, parse_expr("<x, y> * fst['b]"))
        assert not parallel_reduces(e, parse_expr("x * 'b"))

    @pytest.mark.parametrize(
        "source,expected",
        [
            ("x * fst['c]", []),
            ("(<x, y> * 'a).'a * fst['c]", ["<x, y> * fst['c]"]),
            ("<x, y> * z.(z * fst['b])", ["<x, y> * fst['b]"]),
            # 值条件看分量的归约结果
            ("(x * 'a).'a * z.(z * not<z>)", ["x * z.(z * not<z>)", "x * not<x>"]),
            (
                "<(x * 'a).'a, (y * 'b).'b> * fst['c]",
                [
                    "<x, (y * 'b).'b> * fst['c]",
                    "<(x * 'a).'a, y> * fst['c]",
                    "<x, y> * fst['c]",
                    "x * 'c",
                ],
            ),
        ],
    )
    def test_parallel_step_is_exactly_the_clauses(self, source, expected):
        e = parse_expr(source)
        found = {alpha_key(r) for r in parallel_step(e)}
        assert found == {alpha_key(e)} | {alpha_key(parse_expr(t)) for t in expected}


class TestChoice:
    def test_nondeterministic_choice_has_two_normal_forms(self):
        graph = build_graph(_choice_statement(), NONDET)
        assert _normal_forms(graph) == ["x * 'a", "y * 'a"]
        assert confluent(graph) is Verdict.NO
        assert strongly_normalizing(graph) is Verdict.YES

    @pytest.mark.parametrize("strategy,expected", [(CBV, "x * 'a"), (CBN, "y * 'a")])
    def test_deterministic_strategies_choose_one_side(self, strategy, expected):
        graph = build_graph(_choice_statement(), strategy)
        assert _normal_forms(graph) == [expected]
        assert confluent(graph) is Verdict.YES

    def test_all_traces(self):
        traces = normalize(_choice_statement(), NONDET, pick=Pick.ALL)
        assert isinstance(traces, TraceSet)
        assert not traces.cap_hit
        finals = {show_expr(e) for e in traces.finals}
        assert finals == {"x * 'a", "y * 'a"}

    def test_stdlib_choice_term_behaves_the_same(self):
        term = stdlib_judgment("choice").principal
        graph = build_graph(Cut(term, Covar(covar("a"))), NONDET)
        assert _normal_forms(graph) == ["x * 'a", "y * 'a"]


class TestInductiveAndCoinductive:
    @pytest.mark.parametrize("n", [0, 1, 2, 3, 4])
    def test_iterating_successor_rebuilds_the_numeral(self, n):
        e = stdlib_judgment("iterate-succ", n).principal
        trace = normalize(e, NONDET)
        assert trace.status is TraceStatus.NORMAL_FORM
        assert alpha_eq(trace.final, Cut(numeral(n), Covar(covar("k"))))

    @pytest.mark.parametrize("n", [0, 1, 2])
    def test_stream_heads(self, n):
        e = Cut(stream(Var(var("y"))), tl_n(n, Covar(covar("a")), A))
        final = normal_form(e, NONDET)
        assert is_normal(final, NONDET)
        target = parse_expr("y * 'a")
        assert any(alpha_eq(sub, target) for _, sub in positions(final))

    def test_numerals_are_normal_but_not_values(self):
        # 0 的分量 * 是 μ 抽象，值调用下仍有 ς 可约式
        assert is_normal(numeral(2), NONDET)
        assert not is_normal(numeral(2), CBV)
        assert NAT == stdlib_judgment("zero").type

    def test_inserting_into_the_empty_list(self):
        m, k = Var(var("m")), Covar(covar("k"))
        graph = build_graph(Cut(nil(A), insert(m, k, A)), NONDET)
        expected = Cut(cons_list(m, nil(A), A), k)
        assert any(alpha_eq(nf, expected) for nf in graph.normal_forms())

    @pytest.mark.slow
    def test_insertion_can_place_the_element_anywhere(self):
        m, n, k = Var(var("m")), Var(var("n")), Covar(covar("k"))
        graph = build_graph(Cut(cons_list(n, nil(A), A), insert(m, k, A)), NONDET)
        found = graph.normal_forms()
        for items in ([m, n], [n, m]):
            expected = Cut(cons_list(items[0], cons_list(items[1], nil(A), A), A), k)
            assert any(alpha_eq(nf, expected) for nf in found)


class TestGeneratedProperties:
    @given(typed_judgments(max_depth=2))
    def test_deterministic_strategies_are_confluent(self, j):
        for strategy in (CBV, CBN):
            graph = build_graph(j.principal, strategy, limits=SMALL)
            assert not graph.cap_hit
            assert confluent(graph) is Verdict.YES
            assert strongly_normalizing(graph) is Verdict.YES
            assert len(graph.normal_forms()) == 1

    @given(typed_judgments(max_depth=3, fixpoints=True))
    def test_typed_expressions_terminate(self, j):
        trace = normalize(j.principal, NONDET)
        assert trace.status is TraceStatus.NORMAL_FORM

    @given(untyped_exprs(max_depth=3))
    def test_sigma_steps_decrease_rank(self, e):
        for redex in redexes(e, CBV):
            if redex.rule.is_sigma:
                assert rank(step(e, redex, CBV), Mode.VALUE) < rank(e, Mode.VALUE)

    @pytest.mark.slow
    @given(typed_judgments(max_depth=2))
    def test_parallel_reduction_has_the_diamond_property(self, j):
        reducts = parallel_step(j.principal)
        for left in reducts:
            joins = {alpha_key(e) for e in parallel_step(left)}
            for right in reducts:
                assert joins & {alpha_key(e) for e in parallel_step(right)}

    @given(typed_judgments(max_depth=2))
    def test_parallel_step_lies_between_one_step_and_many(self, j):
        d = j.principal
        reducts = {alpha_key(e): e for e in parallel_step(d)}
        if is_normal(d, WEAK_CBV):
            assert list(reducts) == [alpha_key(d)]
        for redex in redexes(d, WEAK_CBV):
            assert alpha_key(step(d, redex, WEAK_CBV)) in reducts
        for e in reducts.values():
            assert find_path(d, e, WEAK_CBV, limits=SMALL) is not None

    @given(typed_judgments(max_depth=2))
    def test_find_path_follows_a_leftmost_trace(self, j):
        trace = normalize(j.principal, NONDET)
        path = find_path(j.principal, trace.final, NONDET, limits=SMALL)
        assert path is not None
        assert len(path) <= len(trace)

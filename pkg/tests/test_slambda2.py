import pytest

from dualcalc.errors import EigenvariableCapture, MissingAnnotation, UnboundVariable
from dualcalc.parsers import parse_sl, parse_sl_type
from dualcalc.reduction import TraceStatus
from dualcalc.slambda2 import (
    BOTTOM,
    ExistsT,
    ForallT,
    MNeg,
    MVar,
    Prod,
    SLRule,
    Sum,
    check_sl,
    is_sl_typable,
    mtype_eq,
    neg,
    normalize_sl,
    sl_alpha_eq,
    sl_redexes,
    sl_size,
    step_sl,
)

X, Y = MVar("X"), MVar("Y")


class TestNegation:
    def test_products_become_sums(self):
        assert neg(Prod(X, Y)) == Sum(MNeg("X"), MNeg("Y"))

    def test_quantifiers_swap(self):
        assert neg(ForallT("X", Prod(X, Y))) == ExistsT("X", Sum(MNeg("X"), MNeg("Y")))

    @pytest.mark.parametrize(
        "text", ["X", "X^", "X & Y^", "forall X. X + (Y & X^)", "exists Z. Z & Z"]
    )
    def test_involution(self, text):
        t = parse_sl_type(text)
        assert neg(neg(t)) == t


class TestTyping:
    def test_variable(self):
        assert check_sl({"x": X}, parse_sl("x")) == X

    def test_abstraction_has_negated_type(self):
        t = parse_sl("\\x : X. x * y")
        assert mtype_eq(check_sl({"y": MNeg("X")}, t), MNeg("X"))

    def test_free_variable_must_be_declared(self):
        with pytest.raises(UnboundVariable):
            check_sl({}, parse_sl("\\x : X. x * y"))

    def test_application_has_bottom_type(self):
        assert check_sl({"x": X, "y": MNeg("X")}, parse_sl("x * y")) == BOTTOM
        assert not is_sl_typable({"x": X, "y": X}, parse_sl("x * y"))

    def test_eigenvariable_must_not_occur_in_context(self):
        with pytest.raises(EigenvariableCapture):
            check_sl({"x": X}, parse_sl("a{X}(x)"))
        assert mtype_eq(check_sl({"x": X}, parse_sl("a{Z}(x)")), ForallT("Z", X))

    def test_pack_needs_a_witness(self):
        with pytest.raises(MissingAnnotation):
            check_sl({"x": X}, parse_sl("e(x)"), ExistsT("Z", MVar("Z")))
        check_sl({"x": X}, parse_sl("e{X}(x)"), ExistsT("Z", MVar("Z")))


class TestReduction:
    @pytest.mark.parametrize(
        "source,target,rule",
        [
            ("(\\x. x * z) * u", "u * z", SLRule.BETA_R),
            ("u * (\\x. x * z)", "u * z", SLRule.BETA_L),
            ("<t, s> * inj1(u)", "t * u", SLRule.BETA_PROD_SUM1),
            ("inj2(u) * <t, s>", "u * s", SLRule.BETA_SUM_PROD2),
            ("a(t) * e(u)", "t * u", SLRule.BETA_FORALL_EXISTS),
            ("e(u) * a(t)", "u * t", SLRule.BETA_EXISTS_FORALL),
        ],
    )
    def test_root_rules(self, source, target, rule):
        (redex, reduct), *_ = step_sl(parse_sl(source))
        assert redex.rule is rule
        assert sl_alpha_eq(reduct, parse_sl(target))

    def test_eta_needs_the_binder_to_be_fresh(self):
        assert [r.rule for r in sl_redexes(parse_sl("\\y. y * t"))] == [SLRule.ETA_R]
        assert sl_redexes(parse_sl("\\y. y * y")) == []

    def test_symmetric_application(self):
        left = {r.rule: t for r, t in step_sl(parse_sl("(\\x. x * z) * u"))}
        right = {r.rule: t for r, t in step_sl(parse_sl("u * (\\x. x * z)"))}
        assert sl_alpha_eq(left[SLRule.BETA_R], right[SLRule.BETA_L])

    def test_normalization(self):
        trace = normalize_sl(parse_sl("(\\x. x * z) * (\\y. y * w)"))
        assert trace.status is TraceStatus.NORMAL_FORM
        assert sl_redexes(trace.final) == []

    def test_fuel_exhaustion(self):
        omega = parse_sl("(\\x. x * x) * (\\x. x * x)")
        trace = normalize_sl(omega, fuel=3)
        assert trace.status is TraceStatus.FUEL_EXHAUSTED
        assert len(trace) == 3
        assert sl_alpha_eq(trace.final, omega)


def test_size_counts_every_node():
    assert sl_size(parse_sl("x")) == 1
    assert sl_size(parse_sl("<x, inj1(y)>")) == 4

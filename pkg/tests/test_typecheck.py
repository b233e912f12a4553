import pytest
from hypothesis import given

from dualcalc.dc2 import check2, normalize2
from dualcalc.errors import (
    MissingAnnotation,
    NegativeOccurrence,
    TypeCheckError,
    TypeMismatch,
    UnboundVariable,
)
from dualcalc.parsers import parse_expr, parse_judgment
from dualcalc.reduction import NONDET, NONDET_DC2, Pick
from dualcalc.stdlib import STDLIB, stdlib_judgment
from dualcalc.syntax import Mu, Not, TyVar, Var, alpha_eq, var
from dualcalc.typecheck import (
    RuleName,
    TypeChecker,
    check,
    elaborate,
    elaborate_judgment,
    is_typable,
    judgment,
)
from dualcalc.typecheck.subject import check_reduct_types

from .strategies import typed_judgments

A, B = TyVar("A"), TyVar("B")


@pytest.mark.parametrize("name", sorted(STDLIB))
def test_stdlib_judgments_check(name):
    derivation = check(stdlib_judgment(name, 2), infer=True)
    assert derivation.validate() == []


def test_axiom():
    derivation = check(parse_judgment("x : A |- | x : A"))
    assert derivation.rules() == [RuleName.AX_R]


def test_identity_is_built_by_implication_rules():
    derivation = check(stdlib_judgment("identity"))
    assert derivation.rule is RuleName.I_R
    assert RuleName.NOT_R in derivation.rules()


def test_unbound_variable():
    with pytest.raises(UnboundVariable):
        check(judgment(Var(var("x")), A))


def test_type_mismatch():
    with pytest.raises(TypeMismatch):
        check(parse_judgment("x : A |- | x : B"))


def test_negative_fixpoint_in_context_is_ill_formed():
    bad = Mu("X", Not(TyVar("X")))
    with pytest.raises(NegativeOccurrence):
        check(judgment(Var(var("x")), bad, {var("x"): bad}))


def test_missing_cut_type_is_reported_by_default():
    j = stdlib_judgment("choice")
    with pytest.raises(MissingAnnotation) as info:
        check(j)
    assert info.value.which == "cut type"
    assert not is_typable(j)
    assert is_typable(j, infer=True)


def test_annotated_cut_checks_by_default():
    j = parse_judgment("x : A, y : A |- | ((x * 'a).'b *:(A) z.(y * 'a)).'a : A")
    derivation = check(j)
    assert derivation.rule is RuleName.I_R
    assert derivation.validate() == []


def test_elaborated_expression_checks_by_default():
    j = stdlib_judgment("choice")
    check(elaborate_judgment(j))
    assert elaborate_judgment(j).principal == elaborate(check(j, infer=True))


def test_in_rule_for_numerals():
    derivation = check(stdlib_judgment("numeral", 3))
    assert derivation.rule is RuleName.MU_R
    assert derivation.rules().count(RuleName.MU_R) == 4


class TestGeneratedJudgments:
    @given(typed_judgments())
    def test_dc_judgments_check(self, j):
        assert check(j).validate() == []

    @given(typed_judgments(fixpoints=True))
    def test_dcmunu_judgments_check(self, j):
        assert check(j).validate() == []

    @given(typed_judgments(fixpoints=True))
    def test_subject_reduction(self, j):
        report = check_reduct_types(j, NONDET, infer=True)
        assert report.ok, [str(f) for f in report.findings]


class TestSecondOrder:
    def test_primed_rules_break_subject_reduction(self):
        j = parse_judgment("x : X /\\ Y | (x * fst['a]).'a * 'b |- 'b : forall Z. X")
        check2(j, primed_quantifiers=True)
        with pytest.raises(TypeCheckError):
            check2(j)

        trace = normalize2(j.principal, fuel=1)
        reduct = trace.steps[0].expr
        assert alpha_eq(reduct, parse_expr("x * fst['b]"))
        with pytest.raises(TypeCheckError):
            check2(j.with_principal(reduct), primed_quantifiers=True)

    def test_real_rules_keep_subject_reduction(self):
        j = parse_judgment(
            "x : X /\\ Y | <(x * fst['a]).'a>a *:(forall Z. X) a{X}['c] |- 'c : X"
        )
        derivation = check2(j)
        assert RuleName.FORALL_R in derivation.rules()
        assert check_reduct_types(j, NONDET_DC2).ok

        result = normalize2(j.principal, pick=Pick.LEFTMOST)
        assert alpha_eq(result.final, parse_expr("x * fst['c]"))
        check2(j.with_principal(result.final))

    def test_eigenvariable_condition(self):
        j = parse_judgment("x : Z |- | <x>a : forall Z. Z")
        assert not is_typable(j)

    def test_checker_is_reusable(self):
        checker = TypeChecker()
        j = parse_judgment("x : A |- | <x>a : forall Z. A")
        assert checker.check(j).rule is RuleName.FORALL_R
        assert checker.check(j).size == 2

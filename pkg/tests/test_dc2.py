import pytest

from dualcalc.dc2 import (
    check2,
    dual2,
    dual2_derivation,
    dual2_judgment,
    dual2_type,
    graph2,
    redexes2,
    step2,
    weaken,
)
from dualcalc.duality import dual_rule
from dualcalc.errors import ForbiddenConstructor, TypeCheckError
from dualcalc.parsers import parse_expr, parse_judgment, parse_type
from dualcalc.reduction import ReductionRule, Verdict, confluent, strongly_normalizing
from dualcalc.stdlib import NAT, zero
from dualcalc.syntax import TyVar, alpha_eq, covar, show_expr, var

INSTANTIATE = "<x>a * a{A}['c]"
CUT_UNDER_FORALL = "x : X /\\ Y | <(x * fst['a]).'a>a *:(forall Z. X) a{X}['c] |- 'c : X"


class TestReduction:
    def test_forall_redex(self):
        e = parse_expr(INSTANTIATE)
        found = redexes2(e)
        assert [r.rule for r in found] == [ReductionRule.BETA_FORALL]
        assert str(found[0]) == "β∀ @ ε"
        assert alpha_eq(step2(e, found[0]), parse_expr("x * 'c"))

    def test_graph_of_instantiation(self):
        graph = graph2(parse_expr(INSTANTIATE))
        assert len(graph) == 2
        assert confluent(graph) is Verdict.YES
        assert strongly_normalizing(graph) is Verdict.YES

    def test_exists_redex_is_dual(self):
        e = dual2(parse_expr(INSTANTIATE))
        assert [r.rule for r in redexes2(e)] == [ReductionRule.BETA_EXISTS]


class TestDuality:
    def test_type_abstraction_becomes_unpacking(self):
        assert show_expr(dual2(parse_expr("<x>a"))) == "e['x]"
        assert show_expr(dual2(parse_expr("a{A}['c]"))) == "<c>e{A}"

    def test_involution(self):
        e = parse_expr(INSTANTIATE)
        assert dual2(dual2(e)) == e

    def test_quantifiers_swap(self):
        assert dual2_type(parse_type("forall X. X /\\ A")) == parse_type("exists X. X \\/ A")

    def test_fixpoints_are_rejected(self):
        with pytest.raises(ForbiddenConstructor):
            dual2_type(NAT)
        with pytest.raises(ForbiddenConstructor):
            dual2(zero())

    def test_dual_judgment_is_derived_by_dual_rules(self):
        j = parse_judgment(CUT_UNDER_FORALL)
        derivation = check2(j)
        dual = check2(dual2_judgment(j))
        assert dual.rule is dual_rule(derivation.rule)
        assert dual2_derivation(derivation).rules() == dual.rules()


class TestWeakening:
    def test_eigenvariable_is_renamed(self):
        j = parse_judgment("x : A |- | <x>a{Z} : forall Z. A")
        weakened = weaken(j, {var("y"): TyVar("Z")})
        assert weakened.principal.eigen != "Z"
        assert var("y") in weakened.gamma
        check2(weakened)

    def test_without_renaming_the_condition_fails(self):
        j = parse_judgment("x : A, y : Z |- | <x>a{Z} : forall Z. A")
        with pytest.raises(TypeCheckError):
            check2(j)

    def test_unrelated_declarations_keep_the_hint(self):
        j = parse_judgment("x : A |- | <x>a{Z} : forall Z. A")
        weakened = weaken(j, delta={covar("k"): TyVar("B")})
        assert weakened.principal == j.principal

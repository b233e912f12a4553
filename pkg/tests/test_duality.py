from hypothesis import given

from dualcalc.duality import (
    dual_derivation,
    dual_expr,
    dual_judgment,
    dual_path,
    dual_rule,
    dual_type,
)
from dualcalc.parsers import parse_expr
from dualcalc.reduction import CBN, CBV, NONDET, is_covalue, is_value, redexes
from dualcalc.stdlib import NAT, NAT_DUAL, hd, star, stdlib_judgment, zero
from dualcalc.stdlib.encodings import BOT
from dualcalc.syntax import alpha_eq, show_expr, type_alpha_eq
from dualcalc.typecheck import check

from .strategies import dcmunu_types, typed_judgments, untyped_exprs


def test_nat_is_dual_to_stream_of_bottom():
    assert dual_type(NAT) == NAT_DUAL


def test_dual_of_zero_is_head_of_dual_star():
    assert alpha_eq(dual_expr(zero()), hd(dual_expr(star()), BOT))
    check(stdlib_judgment("zero-dual"), infer=True)


def test_terms_and_coterms_swap():
    assert show_expr(dual_expr(parse_expr("<x>inl"))) == "fst['x]"
    assert show_expr(dual_expr(parse_expr("x * 'a"))) == "a * 'x"


@given(untyped_exprs(max_depth=5))
def test_expression_duality_is_an_involution(e):
    assert dual_expr(dual_expr(e)) == e


@given(dcmunu_types())
def test_type_duality_is_an_involution(t):
    assert type_alpha_eq(dual_type(dual_type(t)), t)


@given(typed_judgments(fixpoints=True))
def test_judgment_duality_is_an_involution(j):
    assert dual_judgment(dual_judgment(j)) == j


@given(typed_judgments(fixpoints=True))
def test_dual_judgment_is_derived_by_dual_rules(j):
    derivation = check(j)
    dual = check(dual_judgment(j))
    assert dual.rule is dual_rule(derivation.rule)
    assert dual_derivation(derivation).rules() == dual.rules()


@given(typed_judgments(fixpoints=True))
def test_redex_labels_map_to_dual_labels(j):
    e = j.principal
    dual_redexes = {(r.path, r.label) for r in redexes(dual_expr(e), NONDET)}
    for r in redexes(e, NONDET):
        assert (dual_path(e, r.path), r.label.dual()) in dual_redexes


@given(untyped_exprs(max_depth=4))
def test_call_by_value_is_dual_to_call_by_name(e):
    by_name = {(dual_path(e, r.path), r.label.dual()) for r in redexes(e, CBV)}
    assert by_name == {(r.path, r.label) for r in redexes(dual_expr(e), CBN)}


@given(untyped_exprs(max_depth=4))
def test_values_are_dual_to_covalues(e):
    assert is_value(e) == is_covalue(dual_expr(e))

import pytest
from hypothesis import given
from hypothesis import strategies as st

from dualcalc.errors import MonoError
from dualcalc.mono import measure, mono, mono_request
from dualcalc.parsers import parse_expr
from dualcalc.syntax import And, Mu, Not, Nu, Or, TyVar, covar, show_expr, subst_type, var
from dualcalc.syntax.types import is_well_formed
from dualcalc.typecheck import check, judgment

X, Y, A = TyVar("X"), TyVar("Y"), TyVar("A")
SUM = Or(A, A)


def positive_contexts() -> st.SearchStrategy:
    """X 只正出现的上下文类型"""
    return st.recursive(
        st.sampled_from([X, A]),
        lambda inner: st.one_of(
            st.builds(And, inner, inner),
            st.builds(Or, inner, inner),
            st.builds(lambda c: Not(Not(c)), inner),
            st.builds(lambda c: Mu("Y", Or(A, And(c, Y))), inner),
            st.builds(lambda c: Nu("Y", And(c, Y)), inner),
        ),
        max_leaves=4,
    )


def _term_request(c):
    """x:A ⊢ <x>inl : A∨A，n : C[A]"""
    return mono_request("X", c, A, SUM, var("x"), parse_expr("<x>inl"), parse_expr("n"))


def _coterm_request(c):
    """y.(<y>inl * 'a) : A | 'a : A∨A，'l : C[A∨A]"""
    body = parse_expr("y.(<y>inl * 'a)")
    return mono_request("X", c, A, SUM, covar("a"), body, parse_expr("'l"))


class TestMeasure:
    def test_absent_variable_measures_zero(self):
        assert measure(A, "X") == 0
        assert measure(Mu("X", Or(A, X)), "X") == 0

    def test_connectives(self):
        assert measure(X, "X") == 1
        assert measure(And(X, A), "X") == 2
        assert measure(Or(Not(X), X), "X") == 4

    def test_fixpoint_counts_both_variables(self):
        # ‖μY.(A ∨ (X ∧ Y))‖_X = ‖A ∨ (X ∧ Y)‖_X + ‖A ∨ (X ∧ Y)‖_Y + 1
        assert measure(Mu("Y", Or(A, And(X, Y))), "X") == 3 + 3 + 1


class TestMono:
    def test_term_version_maps_pairs(self):
        c = And(X, Or(A, X))
        image = mono(_term_request(c))
        check(judgment(image, subst_type(c, SUM, "X"), {var("n"): subst_type(c, A, "X")}))

    def test_coterm_version_maps_back(self):
        c = And(X, Or(A, X))
        image = mono(_coterm_request(c))
        delta = {covar("l"): subst_type(c, SUM, "X")}
        check(judgment(image, subst_type(c, A, "X"), delta=delta))

    def test_output_is_reproducible(self):
        c = Mu("Y", Or(A, And(X, Y)))
        first = show_expr(mono(_term_request(c)))
        assert first == show_expr(mono(_term_request(c)))

    def test_variable_in_domain_is_rejected(self):
        with pytest.raises(MonoError):
            mono_request("X", X, X, A, var("x"), parse_expr("x"), parse_expr("n"))

    def test_sorts_must_agree(self):
        with pytest.raises(MonoError):
            mono_request("X", X, A, A, var("x"), parse_expr("x"), parse_expr("'k"))

    @given(positive_contexts())
    def test_term_version_is_typed(self, c):
        assert is_well_formed(c)
        image = mono(_term_request(c))
        check(judgment(image, subst_type(c, SUM, "X"), {var("n"): subst_type(c, A, "X")}))

    @given(positive_contexts())
    def test_coterm_version_is_typed(self, c):
        image = mono(_coterm_request(c))
        delta = {covar("l"): subst_type(c, SUM, "X")}
        check(judgment(image, subst_type(c, A, "X"), delta=delta))

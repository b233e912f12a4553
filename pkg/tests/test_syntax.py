import pytest
from hypothesis import given

from dualcalc.errors import ForbiddenConstructor, NegativeOccurrence
from dualcalc.parsers import parse_expr, parse_type
from dualcalc.syntax import (
    And,
    BindCo,
    Covar,
    Cut,
    Forall,
    Mu,
    Not,
    NotIntro,
    Nu,
    Or,
    System,
    TyVar,
    Var,
    alpha_eq,
    covar,
    free_covars,
    free_names,
    free_type_vars,
    free_vars,
    pos_neg,
    replace_at,
    show_expr,
    show_type,
    subexpr_at,
    subst_term,
    subst_type,
    substitute,
    var,
    well_formed,
)
from dualcalc.syntax.names import NameSupply
from dualcalc.syntax.types import is_well_formed, type_alpha_eq

from .strategies import untyped_exprs

X, A, B = TyVar("X"), TyVar("A"), TyVar("B")


class TestNames:
    def test_polarity_shows_in_printed_name(self):
        assert str(var("x")) == "x"
        assert str(covar("a")) == "'a"
        assert covar("a").toggle() == var("a")

    def test_supply_is_deterministic_and_avoids_reserved(self):
        first = NameSupply(["x1"], seed=0)
        second = NameSupply(["x1"], seed=0)
        names = [first.fresh_var("x") for _ in range(3)]
        assert names == [second.fresh_var("x") for _ in range(3)]
        assert var("x1") not in names
        assert len(set(names)) == 3

    def test_seed_shifts_counter(self):
        assert NameSupply(seed=5).fresh_covar("a") == covar("a6")


class TestTypes:
    def test_positive_and_negative_positions(self):
        pos, neg = pos_neg(Or(Not(X), A))
        assert "A" in pos and "X" not in pos
        assert "X" in neg and "A" not in neg

    def test_negative_fixpoint_is_rejected(self):
        with pytest.raises(NegativeOccurrence):
            well_formed(Mu("X", Not(X)))
        assert is_well_formed(Mu("X", Or(Not(Not(X)), A)))

    def test_quantifiers_only_in_dc2(self):
        with pytest.raises(ForbiddenConstructor):
            well_formed(Forall("X", X), System.DCMUNU)
        with pytest.raises(ForbiddenConstructor):
            well_formed(Nu("X", And(A, X)), System.DC2)
        well_formed(Forall("X", X), System.DC2)

    def test_type_substitution_avoids_capture(self):
        t = Forall("A", And(X, A))
        result = subst_type(t, A, "X")
        assert free_type_vars(result) == {"A"}
        assert type_alpha_eq(result, Forall("Z", And(A, TyVar("Z"))))

    def test_printer_precedence(self):
        assert show_type(And(Or(A, B), Not(A))) == "(A \\/ B) /\\ ~A"
        assert show_type(Or(A, Mu("X", Or(A, X)))) == "A \\/ (mu X. A \\/ X)"


class TestExpressions:
    def test_free_names_respect_binders(self):
        e = parse_expr("(x * 'a).'a")
        assert free_vars(e) == {var("x")}
        assert free_covars(e) == frozenset()

    def test_substitution_renames_binder_to_avoid_capture(self):
        d = BindCo(Cut(Var(var("x")), Covar(covar("a"))), covar("a"))
        m = NotIntro(Covar(covar("a")))
        result = subst_term(d, m, var("x"))
        assert covar("a") in free_covars(result)
        assert alpha_eq(result, parse_expr("([ 'a]not * 'c).'c"))

    def test_simultaneous_substitution(self):
        e = parse_expr("<x, y>")
        swapped = substitute(e, {var("x"): Var(var("y")), var("y"): Var(var("x"))})
        assert show_expr(swapped) == "<y, x>"

    def test_substitution_rejects_wrong_sort(self):
        with pytest.raises(TypeError):
            substitute(parse_expr("x"), {var("x"): Covar(covar("a"))})

    def test_alpha_equivalence(self):
        assert alpha_eq(parse_expr("y.(y * 'a)"), parse_expr("z.(z * 'a)"))
        assert not alpha_eq(parse_expr("y.(y * 'a)"), parse_expr("z.(y * 'a)"))

    def test_paths(self):
        e = parse_expr("<x, y> * fst['a]")
        assert subexpr_at(e, (0, 1)) == Var(var("y"))
        replaced = replace_at(e, (1, 0), Covar(covar("b")))
        assert show_expr(replaced) == "<x, y> * fst['b]"

    @given(untyped_exprs())
    def test_printed_expressions_parse_back(self, e):
        assert alpha_eq(parse_expr(show_expr(e)), e, annotated=True)

    @given(untyped_exprs())
    def test_substituting_a_name_for_itself_changes_nothing(self, e):
        mapping = {n: (Var(n) if n.is_variable else Covar(n)) for n in free_names(e)}
        assert alpha_eq(substitute(e, mapping), e)


def test_type_parser_reads_printer_output():
    t = Nu("X", And(Or(A, Not(B)), X))
    assert parse_type(show_type(t)) == t

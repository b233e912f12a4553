import pytest

from dualcalc.errors import DefinitionError, DualCalcSyntaxError
from dualcalc.parsers import (
    DefinitionKind,
    SourceFile,
    load_prelude,
    parse_coterm,
    parse_definitions,
    parse_expr,
    parse_judgment,
    parse_sl,
    parse_sl_type,
    parse_statement,
    parse_term,
    parse_type,
)
from dualcalc.slambda2 import App, Lam, SVar, show_mtype, show_sl
from dualcalc.stdlib import NAT
from dualcalc.syntax import Forall, Mu, Or, TyVar, alpha_eq, show_expr, var
from dualcalc.syntax.types import System, type_alpha_eq
from dualcalc.translate import dagger_type
from dualcalc.typecheck import check

A = TyVar("A")


class TestSyntaxErrors:
    def test_unknown_character_reports_position(self):
        with pytest.raises(DualCalcSyntaxError) as info:
            parse_expr("x * ? 'a")
        assert (info.value.line, info.value.column) == (1, 5)
        assert "第 1 行第 5 列" in info.value.message

    def test_unexpected_token_on_later_line(self):
        with pytest.raises(DualCalcSyntaxError) as info:
            parse_expr("x *\n  'a 'b")
        assert info.value.line == 2

    def test_truncated_input(self):
        with pytest.raises(DualCalcSyntaxError):
            parse_expr("<x, y")

    def test_sort_is_checked(self):
        assert show_expr(parse_term("<x>inl")) == "<x>inl"
        with pytest.raises(DualCalcSyntaxError):
            parse_coterm("x * 'a")
        with pytest.raises(DualCalcSyntaxError):
            parse_statement("<x>inl")
        assert show_expr(parse_statement("x * 'a")) == "x * 'a"


class TestTypes:
    def test_implication_is_sugar(self):
        t = parse_type("A => A")
        assert t == parse_type("~A \\/ A")

    def test_binders_scope_to_the_right(self):
        assert parse_type("mu X. A \\/ X") == Mu("X", Or(A, TyVar("X")))
        assert isinstance(parse_type("forall X. X"), Forall)


class TestJudgments:
    def test_three_shapes(self):
        right = parse_judgment("x : A |- | x : A")
        left = parse_judgment("'a : A | |- 'a : A")
        center = parse_judgment("x : A | x * 'a |- 'a : A")
        assert right.type == left.type == A
        assert center.type is None
        assert var("x") in center.gamma

    def test_system_is_inferred(self):
        assert parse_judgment("x : A |- | x : A").system is System.DCMUNU
        assert parse_judgment("|- | zero : mu X. A \\/ X").system is System.DCMUNU
        assert parse_judgment("x : A |- | <x>a : forall Z. A").system is System.DC2


class TestSourceFiles:
    def test_definitions_keep_kind_and_line(self):
        defs = parse_definitions("type T = A\n\nterm t : T = x\n")
        assert [d.kind for d in defs] == [DefinitionKind.TYPE, DefinitionKind.TERM]
        assert defs[1].line == 3

    def test_references_expand(self):
        source = SourceFile.from_text("term f [y : A] [] : A = y\nstmt s [] ['k : A] = f * 'k")
        j = source.judgment("s")
        assert alpha_eq(j.principal, parse_expr("y * 'k"))

    def test_duplicate_definition(self):
        with pytest.raises(DefinitionError, match="重复定义"):
            SourceFile.from_text("type T = A\ntype T = A")

    def test_cycle(self):
        source = SourceFile.from_text("term f : A = g\nterm g : A = f")
        with pytest.raises(DefinitionError, match="循环"):
            source.judgment("f")

    def test_unknown_name(self):
        with pytest.raises(DefinitionError, match="未知"):
            SourceFile.from_text("type T = A").judgment("nope")

    def test_type_definitions_have_no_judgment(self):
        with pytest.raises(DefinitionError):
            SourceFile.from_text("type T = A").judgment("T")

    def test_missing_file(self, tmp_path):
        with pytest.raises(FileNotFoundError):
            SourceFile.from_file(str(tmp_path / "missing.dc"))


class TestPrelude:
    def test_nat_matches_encoding(self, prelude):
        assert type_alpha_eq(prelude.types()["Nat"], NAT)

    def test_every_definition_checks(self, prelude):
        for name, j in prelude.judgments().items():
            assert check(j, infer=True).validate() == [], name

    def test_loading_twice_gives_the_same_definitions(self, prelude):
        assert len(load_prelude()) == len(prelude)


class TestSymmetricLambda:
    def test_terms(self):
        assert parse_sl("\\x. x * y") == Lam("x", App(SVar("x"), SVar("y")))
        t = parse_sl("\\x. (x * y)")
        assert parse_sl(show_sl(t)) == t

    def test_types_read_printer_output(self):
        for text in ("A /\\ ~B", "forall X. X \\/ ~X", "exists Y. ~(A /\\ Y)"):
            t = dagger_type(parse_type(text))
            assert parse_sl_type(show_mtype(t)) == t

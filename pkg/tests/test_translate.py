import pytest
from hypothesis import given

from dualcalc.config import Limits
from dualcalc.dc2 import check2, redexes2, step2
from dualcalc.errors import TranslationError
from dualcalc.parsers import parse_expr, parse_judgment
from dualcalc.reduction import CBV, NONDET, NONDET_DC2, find_path, redexes, step
from dualcalc.slambda2 import (
    App,
    Inj1,
    Inj2,
    Lam,
    MNeg,
    MVar,
    Prod,
    SPair,
    Sum,
    sl_alpha_eq,
    step_sl,
)
from dualcalc.stdlib import NAT, stdlib_judgment
from dualcalc.syntax import And, Exists, Forall, Not, Or, TyVar, alpha_eq
from dualcalc.translate import (
    circledast,
    dagger_expr,
    dagger_judgment,
    dagger_type,
    overline_expr,
    overline_judgment,
    overline_type,
)

from .strategies import typed_judgments

A, B = TyVar("A"), TyVar("B")
SEARCH = Limits(path_depth=24, path_nodes=50_000)

DCMUNU_ENTRIES = [
    "zero",
    "succ",
    "numeral",
    "itr",
    "iterate-succ",
    "nil",
    "list-cons",
    "stream",
    "hd",
    "tl",
    "identity",
    "choice",
]


class TestOverline:
    def test_fixpoint_types_become_quantifiers(self):
        assert isinstance(overline_type(NAT), Forall)
        assert overline_type(A) == A
        stream = stdlib_judgment("stream").type
        assert isinstance(overline_type(stream), Exists)

    def test_connectives_are_kept(self):
        assert overline_type(And(A, Not(B))) == And(A, Not(B))

    @pytest.mark.parametrize("name", DCMUNU_ENTRIES)
    def test_stdlib_images_check_in_dc2(self, name):
        image = overline_judgment(stdlib_judgment(name, 1))
        assert check2(image, infer=True).validate() == []

    def test_dc_expressions_are_unchanged(self):
        e = parse_expr("<x, y> * [z.(z * 'a), 'b]")
        assert alpha_eq(overline_expr(e), e)

    @given(typed_judgments(max_depth=2, fixpoints=True))
    def test_generated_images_check_in_dc2(self, j):
        check2(overline_judgment(j), infer=True)

    @pytest.mark.slow
    def test_reduction_is_simulated(self):
        e = stdlib_judgment("iterate-succ", 1).principal
        first = redexes(e, NONDET)[0]
        reduct = step(e, first, NONDET)
        path = find_path(
            overline_expr(e),
            overline_expr(reduct),
            NONDET_DC2,
            limits=SEARCH,
            min_steps=1,
            prune=True,
        )
        assert path is not None


class TestDagger:
    def test_types(self):
        assert dagger_type(Or(A, And(A, B))) == Sum(MVar("A"), Prod(MVar("A"), MVar("B")))
        assert dagger_type(Not(A)) == MNeg("A")

    def test_fixpoints_are_rejected(self):
        with pytest.raises(TranslationError):
            dagger_type(NAT)

    @pytest.mark.parametrize(
        "source,node",
        [
            ("<x>inl", Inj1),
            ("fst['a]", Inj1),
            ("<x>inr", Inj2),
            ("snd['a]", Inj2),
            ("<x, y>", SPair),
            ("['a, 'b]", SPair),
            ("x.(x * 'a)", Lam),
            ("(x * 'a).'a", Lam),
            ("[x.(x * 'a)]not", Lam),
            ("x * 'a", App),
        ],
    )
    def test_dual_constructors_share_an_image(self, source, node):
        assert isinstance(dagger_expr(parse_expr(source)), node)

    def test_negation_elimination_is_transparent(self):
        assert dagger_expr(parse_expr("not<x>")) == dagger_expr(parse_expr("x"))

    def test_second_order_judgment_is_typable(self):
        j = parse_judgment(
            "x : X /\\ Y | <(x * fst['a]).'a>a *:(forall Z. X) a{X}['c] |- 'c : X"
        )
        assert dagger_judgment(j).is_typable()

    @given(typed_judgments(max_depth=3))
    def test_generated_images_are_typable(self, j):
        assert dagger_judgment(j).is_typable()

    @given(typed_judgments(max_depth=3))
    def test_each_step_maps_to_one_step(self, j):
        e = j.principal
        image = dagger_expr(e)
        one_step = [t for _, t in step_sl(image)]
        for redex in redexes2(e):
            target = dagger_expr(step2(e, redex))
            assert any(sl_alpha_eq(t, target) for t in one_step)


class TestCircledast:
    def test_values_keep_their_shape(self):
        e = parse_expr("<x, [y.(y * 'a)]not>")
        assert alpha_eq(circledast(e), e)

    def test_non_value_component_is_lifted(self):
        e = parse_expr("<(x * 'b).'a>inl * 'c")
        image = circledast(e)
        assert not any(r.rule.is_sigma for r in redexes(image, CBV))
        assert find_path(e, image, CBV) is not None

    def test_second_order_input_is_rejected(self):
        with pytest.raises(TranslationError):
            circledast(parse_expr("<x>a"))

    @given(typed_judgments(max_depth=3, fixpoints=True))
    def test_image_has_no_sigma_redexes(self, j):
        image = circledast(j.principal)
        assert not any(r.rule.is_sigma for r in redexes(image, CBV))

    @given(typed_judgments(max_depth=2, fixpoints=True))
    def test_call_by_value_reaches_the_image(self, j):
        image = circledast(j.principal)
        assert find_path(j.principal, image, CBV, limits=SEARCH) is not None

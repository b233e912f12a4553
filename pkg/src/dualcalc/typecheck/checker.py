"""
类型检查器

项与余项按自上而下传入的期望类型检查。切割语句的类型取自注解，或从任一侧可综合的子表达式得到；
两者都没有时，默认的双向模式直接报 MissingAnnotation；推断模式（infer=True）引入类型元变量并通过合一求解。
需要知道期望类型头部的构造子（coitr、itr、⟨M⟩a、⟨M⟩e、a[K]、e[K]）遇到未求解的元变量时推迟检查，
直到元变量被求解；始终无法求解则报 MissingAnnotation("cut type")。
"""

from __future__ import annotations

from typing import Optional, Union

from ..errors import (
    EigenvariableCapture,
    ForbiddenConstructor,
    IllFormedType,
    MissingAnnotation,
    TypeCheckError,
    TypeMismatch,
    UnboundVariable,
)
from ..syntax.names import NameSupply
from ..syntax.terms import (
    CONSTRUCTOR_NAMES,
    DC2_CONSTRUCTORS,
    FIXPOINT_CONSTRUCTORS,
    BindCo,
    BindVar,
    Case,
    Coitr,
    Coterm,
    Covar,
    Cut,
    Expr,
    Fst,
    In,
    Inl,
    Inr,
    Itr,
    NotElim,
    NotIntro,
    Out,
    Pair,
    Snd,
    Sort,
    Statement,
    Term,
    TyAbs,
    TyInst,
    TyPack,
    TyUnpack,
    Var,
)
from ..syntax.traversal import expr_type_names
from ..syntax.types import (
    And,
    Exists,
    Forall,
    Meta,
    Mu,
    Not,
    Nu,
    Or,
    Quantified,
    System,
    TypeExpr,
    TyVar,
    all_type_names,
    free_type_vars,
    subst_type,
    well_formed,
)
from .context import Context, Judgment
from .derivation import Derivation, RuleName
from .unify import Unifier

Path = tuple[int, ...]

_FORBIDDEN_EXPRS: dict[System, tuple[type, ...]] = {
    System.DC: FIXPOINT_CONSTRUCTORS + DC2_CONSTRUCTORS,
    System.DCMUNU: DC2_CONSTRUCTORS,
    System.DC2: FIXPOINT_CONSTRUCTORS,
}


class _Node:
    __slots__ = ("rule", "gamma", "delta", "expr", "type", "premises", "eigen", "witness")

    def __init__(self, rule, gamma, delta, expr, type_, premises=(), eigen=None, witness=None):
        self.rule = rule
        self.gamma = gamma
        self.delta = delta
        self.expr = expr
        self.type = type_
        self.premises = list(premises)
        self.eigen = eigen
        self.witness = witness


class _Deferred:
    """等待期望类型被求解的检查"""

    __slots__ = ("gamma", "delta", "expr", "type", "path", "node")

    def __init__(self, gamma, delta, expr, type_, path):
        self.gamma = gamma
        self.delta = delta
        self.expr = expr
        self.type = type_
        self.path = path
        self.node: Optional[_Node] = None


_Result = Union[_Node, _Deferred]


class TypeChecker:
    """
    DC / DCμν / DC2 的类型检查器

    Args:
        infer: 缺少切割类型时引入类型元变量并通过合一求解，而不是报 MissingAnnotation
        primed_quantifiers: 启用仅供测试的带撇量词规则 (∀R′)(∀L′)(∃R′)(∃L′)
    """

    def __init__(self, *, infer: bool = False, primed_quantifiers: bool = False):
        self.infer = infer
        self.primed_quantifiers = primed_quantifiers

    def check(self, judgment: Judgment) -> Derivation:
        """检查判断，成功时返回推导树，失败时抛出 TypeCheckError / IllFormedType"""
        return _Session(self, judgment.system).run(judgment)


def check(judgment: Judgment, *, infer: bool = False) -> Derivation:
    return TypeChecker(infer=infer).check(judgment)


def is_typable(judgment: Judgment, *, infer: bool = False) -> bool:
    try:
        check(judgment, infer=infer)
    except (TypeCheckError, IllFormedType):
        return False
    return True


class _Session:
    def __init__(self, checker: TypeChecker, system: System):
        self.infer = checker.infer
        self.primed = checker.primed_quantifiers
        self.system = system
        self.unifier = Unifier()
        self.pending: list[_Deferred] = []
        self.eigen_checks: list[tuple[str, Context, Context, Path]] = []
        self.grounding: dict[int, TypeExpr] = {}
        self.supply = NameSupply()
        self._ctx_cache: dict[int, tuple[Context, Context, Context, Context]] = {}

    # ------------------------------------------------------------------
    # 入口
    # ------------------------------------------------------------------

    def run(self, judgment: Judgment) -> Derivation:
        declared = list(judgment.gamma.values()) + list(judgment.delta.values())
        if judgment.type is not None:
            declared.append(judgment.type)
        for ty in declared:
            well_formed(ty, self.system)
            self.supply.reserve(all_type_names(ty))
        self.supply.reserve(expr_type_names(judgment.principal))

        root = self._dispatch(
            judgment.gamma, judgment.delta, judgment.principal, judgment.type, ()
        )
        self._drain()
        self._check_eigenvariables()
        return self._freeze(root)

    def _dispatch(
        self,
        gamma: Context,
        delta: Context,
        e: Expr,
        ty: Optional[TypeExpr],
        path: Path,
    ) -> _Result:
        self._allowed(e, path)
        if e.sort is Sort.TERM:
            return self._term(gamma, delta, e, ty, path)
        if e.sort is Sort.COTERM:
            return self._coterm(gamma, delta, e, ty, path)
        return self._statement(gamma, delta, e, path)

    def _allowed(self, e: Expr, path: Path) -> None:
        if isinstance(e, _FORBIDDEN_EXPRS[self.system]):
            raise ForbiddenConstructor(self.system, CONSTRUCTOR_NAMES[type(e)])

    # ------------------------------------------------------------------
    # 类型工具
    # ------------------------------------------------------------------

    def _unify(self, expected: TypeExpr, found: TypeExpr, path: Path) -> None:
        if not self.unifier.unify(expected, found):
            raise TypeMismatch(path, self.unifier.zonk(expected), self.unifier.zonk(found))

    def _annotation(self, ann: TypeExpr) -> TypeExpr:
        well_formed(ann, self.system)
        return ann

    def _split(self, ty: TypeExpr, cls: type, path: Path) -> tuple[TypeExpr, ...]:
        """把期望类型拆成 cls 的分量；期望为元变量时引入新元变量"""
        target = self.unifier.resolve(ty)
        arity = 1 if cls is Not else 2
        if isinstance(target, Meta):
            if not self.infer:
                raise MissingAnnotation(path, "cut type")
            parts = tuple(self.unifier.fresh() for _ in range(arity))
            self.unifier.unify(target, cls(*parts))
            return parts
        if isinstance(target, cls):
            return (target.body,) if cls is Not else (target.left, target.right)
        shape = {And: "? /\\ ?", Or: "? \\/ ?", Not: "~?"}[cls]
        raise TypeMismatch(path, shape, self.unifier.zonk(target))

    def _head(self, ty: TypeExpr, cls: type, path: Path) -> Optional[Quantified]:
        """期望类型的量词头部；未知时返回 None（调用方推迟）"""
        target = self.unifier.resolve(ty)
        if isinstance(target, Meta):
            if not self.infer:
                raise MissingAnnotation(path, "cut type")
            return None
        if isinstance(target, cls):
            return target
        keyword = {Mu: "mu", Nu: "nu", Forall: "forall", Exists: "exists"}[cls]
        raise TypeMismatch(path, f"{keyword} ?. ?", self.unifier.zonk(target))

    def _defer(self, gamma, delta, e, ty, path) -> _Deferred:
        item = _Deferred(gamma, delta, e, ty, path)
        self.pending.append(item)
        return item

    def _snapshot(self):
        return self.unifier.snapshot(), len(self.pending), len(self.eigen_checks)

    def _restore(self, snap) -> None:
        self.unifier.restore(snap[0])
        del self.pending[snap[1] :]
        del self.eigen_checks[snap[2] :]

    def _eigen_body(
        self, gamma: Context, delta: Context, q: Quantified, eigen: Optional[str], path: Path
    ) -> tuple[str, TypeExpr]:
        """选定特征变量；未给提示且绑定子在上下文中自由出现时换成新名字"""
        q = self.unifier.zonk(q)
        if eigen is None:
            occupied = set()
            for ty in list(gamma.values()) + list(delta.values()):
                occupied |= free_type_vars(self.unifier.zonk(ty))
            if q.binder not in occupied:
                return q.binder, q.body
            eigen = self.supply.fresh_type(q.binder)
        if eigen == q.binder:
            return q.binder, q.body
        if eigen in free_type_vars(q):
            raise EigenvariableCapture(eigen, path)
        return eigen, subst_type(q.body, TyVar(eigen), q.binder)

    # ------------------------------------------------------------------
    # 项
    # ------------------------------------------------------------------

    def _term(self, gamma, delta, e: Term, ty: TypeExpr, path: Path) -> _Result:
        if self.primed:
            target = self.unifier.resolve(ty)
            if isinstance(target, Forall) and not isinstance(e, TyAbs):
                return self._with_fallback(
                    lambda: self._term_rules(gamma, delta, e, ty, path),
                    lambda: self._forall_r_primed(gamma, delta, e, target, path),
                )
            if isinstance(target, Exists) and not isinstance(e, TyPack):
                return self._with_fallback(
                    lambda: self._term_rules(gamma, delta, e, ty, path),
                    lambda: self._exists_r_primed(gamma, delta, e, target, path),
                )
        return self._term_rules(gamma, delta, e, ty, path)

    def _with_fallback(self, first, second) -> _Result:
        snap = self._snapshot()
        try:
            return first()
        except TypeCheckError:
            self._restore(snap)
            return second()

    def _term_rules(self, gamma, delta, e: Term, ty: TypeExpr, path: Path) -> _Result:
        match e:
            case Var(name):
                found = gamma.get(name)
                if found is None:
                    raise UnboundVariable(name, path)
                self._unify(ty, found, path)
                return _Node(RuleName.AX_R, gamma, delta, e, ty)
            case Pair(left, right):
                a, b = self._split(ty, And, path)
                return _Node(
                    RuleName.AND_R,
                    gamma,
                    delta,
                    e,
                    ty,
                    [
                        self._dispatch(gamma, delta, left, a, path + (0,)),
                        self._dispatch(gamma, delta, right, b, path + (1,)),
                    ],
                )
            case Inl(body, ann) | Inr(body, ann):
                if ann is not None:
                    self._unify(ty, self._annotation(ann), path)
                a, b = self._split(ty, Or, path)
                rule = RuleName.OR_R1 if isinstance(e, Inl) else RuleName.OR_R2
                part = a if isinstance(e, Inl) else b
                return _Node(
                    rule,
                    gamma,
                    delta,
                    e,
                    ty,
                    [self._dispatch(gamma, delta, body, part, path + (0,))],
                )
            case NotIntro(body):
                (a,) = self._split(ty, Not, path)
                return _Node(
                    RuleName.NOT_R,
                    gamma,
                    delta,
                    e,
                    ty,
                    [self._dispatch(gamma, delta, body, a, path + (0,))],
                )
            case BindCo(body, binder):
                inner = delta.extend(binder, ty)
                return _Node(
                    RuleName.I_R,
                    gamma,
                    delta,
                    e,
                    ty,
                    [self._dispatch(gamma, inner, body, None, path + (0,))],
                )
            case In(ann, body):
                mu = self._annotation(ann)
                if not isinstance(mu, Mu):
                    raise IllFormedType(f"in 的注解必须是 μ 类型: {mu}")
                self._unify(ty, mu, path)
                unfolded = subst_type(mu.body, mu, mu.binder)
                return _Node(
                    RuleName.MU_R,
                    gamma,
                    delta,
                    e,
                    ty,
                    [self._dispatch(gamma, delta, body, unfolded, path + (0,))],
                )
            case Coitr(ann, binder, step, seed):
                carrier = self._annotation(ann)
                nu = self._head(ty, Nu, path)
                if nu is None:
                    return self._defer(gamma, delta, e, ty, path)
                nu = self.unifier.zonk(nu)
                return _Node(
                    RuleName.NU_R,
                    gamma,
                    delta,
                    e,
                    ty,
                    [
                        self._dispatch(
                            gamma.extend(binder, carrier),
                            delta,
                            step,
                            subst_type(nu.body, carrier, nu.binder),
                            path + (0,),
                        ),
                        self._dispatch(gamma, delta, seed, carrier, path + (1,)),
                    ],
                )
            case TyAbs(body, eigen):
                fa = self._head(ty, Forall, path)
                if fa is None:
                    return self._defer(gamma, delta, e, ty, path)
                used, body_type = self._eigen_body(gamma, delta, fa, eigen, path)
                self.eigen_checks.append((used, gamma, delta, path))
                return _Node(
                    RuleName.FORALL_R,
                    gamma,
                    delta,
                    e,
                    ty,
                    [self._dispatch(gamma, delta, body, body_type, path + (0,))],
                    eigen=used,
                )
            case TyPack(body, witness):
                if witness is None:
                    raise MissingAnnotation(path, "∀/∃ witness")
                witness = self._annotation(witness)
                ex = self._head(ty, Exists, path)
                if ex is None:
                    return self._defer(gamma, delta, e, ty, path)
                ex = self.unifier.zonk(ex)
                return _Node(
                    RuleName.EXISTS_R,
                    gamma,
                    delta,
                    e,
                    ty,
                    [
                        self._dispatch(
                            gamma, delta, body, subst_type(ex.body, witness, ex.binder), path + (0,)
                        )
                    ],
                    witness=witness,
                )
        raise TypeError(f"不是项: {e!r}")

    def _forall_r_primed(self, gamma, delta, e: Term, fa: Forall, path: Path) -> _Result:
        self.eigen_checks.append((fa.binder, gamma, delta, path))
        premise = self._term_rules(gamma, delta, e, fa.body, path)
        return _Node(
            RuleName.FORALL_R_PRIMED, gamma, delta, e, fa, [premise], eigen=fa.binder
        )

    def _exists_r_primed(self, gamma, delta, e: Term, ex: Exists, path: Path) -> _Result:
        witness = self.unifier.fresh()
        premise = self._term_rules(gamma, delta, e, subst_type(ex.body, witness, ex.binder), path)
        return _Node(RuleName.EXISTS_R_PRIMED, gamma, delta, e, ex, [premise], witness=witness)

    # ------------------------------------------------------------------
    # 余项
    # ------------------------------------------------------------------

    def _coterm(self, gamma, delta, e: Coterm, ty: TypeExpr, path: Path) -> _Result:
        if self.primed:
            target = self.unifier.resolve(ty)
            if isinstance(target, Forall) and not isinstance(e, TyInst):
                return self._with_fallback(
                    lambda: self._coterm_rules(gamma, delta, e, ty, path),
                    lambda: self._forall_l_primed(gamma, delta, e, target, path),
                )
            if isinstance(target, Exists) and not isinstance(e, TyUnpack):
                return self._with_fallback(
                    lambda: self._coterm_rules(gamma, delta, e, ty, path),
                    lambda: self._exists_l_primed(gamma, delta, e, target, path),
                )
        return self._coterm_rules(gamma, delta, e, ty, path)

    def _coterm_rules(self, gamma, delta, e: Coterm, ty: TypeExpr, path: Path) -> _Result:
        match e:
            case Covar(name):
                found = delta.get(name)
                if found is None:
                    raise UnboundVariable(name, path)
                self._unify(ty, found, path)
                return _Node(RuleName.AX_L, gamma, delta, e, ty)
            case Case(left, right):
                a, b = self._split(ty, Or, path)
                return _Node(
                    RuleName.OR_L,
                    gamma,
                    delta,
                    e,
                    ty,
                    [
                        self._dispatch(gamma, delta, left, a, path + (0,)),
                        self._dispatch(gamma, delta, right, b, path + (1,)),
                    ],
                )
            case Fst(body, ann) | Snd(body, ann):
                if ann is not None:
                    self._unify(ty, self._annotation(ann), path)
                a, b = self._split(ty, And, path)
                rule = RuleName.AND_L1 if isinstance(e, Fst) else RuleName.AND_L2
                part = a if isinstance(e, Fst) else b
                return _Node(
                    rule,
                    gamma,
                    delta,
                    e,
                    ty,
                    [self._dispatch(gamma, delta, body, part, path + (0,))],
                )
            case NotElim(body):
                (a,) = self._split(ty, Not, path)
                return _Node(
                    RuleName.NOT_L,
                    gamma,
                    delta,
                    e,
                    ty,
                    [self._dispatch(gamma, delta, body, a, path + (0,))],
                )
            case BindVar(binder, body):
                inner = gamma.extend(binder, ty)
                return _Node(
                    RuleName.I_L,
                    gamma,
                    delta,
                    e,
                    ty,
                    [self._dispatch(inner, delta, body, None, path + (0,))],
                )
            case Out(ann, body):
                nu = self._annotation(ann)
                if not isinstance(nu, Nu):
                    raise IllFormedType(f"out 的注解必须是 ν 类型: {nu}")
                self._unify(ty, nu, path)
                unfolded = subst_type(nu.body, nu, nu.binder)
                return _Node(
                    RuleName.NU_L,
                    gamma,
                    delta,
                    e,
                    ty,
                    [self._dispatch(gamma, delta, body, unfolded, path + (0,))],
                )
            case Itr(ann, binder, step, cont):
                carrier = self._annotation(ann)
                mu = self._head(ty, Mu, path)
                if mu is None:
                    return self._defer(gamma, delta, e, ty, path)
                mu = self.unifier.zonk(mu)
                return _Node(
                    RuleName.MU_L,
                    gamma,
                    delta,
                    e,
                    ty,
                    [
                        self._dispatch(
                            gamma,
                            delta.extend(binder, carrier),
                            step,
                            subst_type(mu.body, carrier, mu.binder),
                            path + (0,),
                        ),
                        self._dispatch(gamma, delta, cont, carrier, path + (1,)),
                    ],
                )
            case TyInst(body, witness):
                if witness is None:
                    raise MissingAnnotation(path, "∀/∃ witness")
                witness = self._annotation(witness)
                fa = self._head(ty, Forall, path)
                if fa is None:
                    return self._defer(gamma, delta, e, ty, path)
                fa = self.unifier.zonk(fa)
                return _Node(
                    RuleName.FORALL_L,
                    gamma,
                    delta,
                    e,
                    ty,
                    [
                        self._dispatch(
                            gamma, delta, body, subst_type(fa.body, witness, fa.binder), path + (0,)
                        )
                    ],
                    witness=witness,
                )
            case TyUnpack(body, eigen):
                ex = self._head(ty, Exists, path)
                if ex is None:
                    return self._defer(gamma, delta, e, ty, path)
                used, body_type = self._eigen_body(gamma, delta, ex, eigen, path)
                self.eigen_checks.append((used, gamma, delta, path))
                return _Node(
                    RuleName.EXISTS_L,
                    gamma,
                    delta,
                    e,
                    ty,
                    [self._dispatch(gamma, delta, body, body_type, path + (0,))],
                    eigen=used,
                )
        raise TypeError(f"不是余项: {e!r}")

    def _forall_l_primed(self, gamma, delta, e: Coterm, fa: Forall, path: Path) -> _Result:
        witness = self.unifier.fresh()
        premise = self._coterm_rules(
            gamma, delta, e, subst_type(fa.body, witness, fa.binder), path
        )
        return _Node(RuleName.FORALL_L_PRIMED, gamma, delta, e, fa, [premise], witness=witness)

    def _exists_l_primed(self, gamma, delta, e: Coterm, ex: Exists, path: Path) -> _Result:
        self.eigen_checks.append((ex.binder, gamma, delta, path))
        premise = self._coterm_rules(gamma, delta, e, ex.body, path)
        return _Node(
            RuleName.EXISTS_L_PRIMED, gamma, delta, e, ex, [premise], eigen=ex.binder
        )

    # ------------------------------------------------------------------
    # 语句
    # ------------------------------------------------------------------

    def _statement(self, gamma, delta, e: Statement, path: Path) -> _Result:
        if not isinstance(e, Cut):
            raise TypeError(f"不是语句: {e!r}")
        if e.ann is not None:
            cut_type = self._annotation(e.ann)
        else:
            cut_type = self._synth_term(gamma, delta, e.term) or self._synth_coterm(
                gamma, delta, e.coterm
            )
            if cut_type is None:
                if not self.infer:
                    raise MissingAnnotation(path, "cut type")
                cut_type = self.unifier.fresh()
        left = self._dispatch(gamma, delta, e.term, cut_type, path + (0,))
        right = self._dispatch(gamma, delta, e.coterm, cut_type, path + (1,))
        return _Node(RuleName.CUT, gamma, delta, e, None, [left, right])

    def _synth_term(self, gamma: Context, delta: Context, e: Term) -> Optional[TypeExpr]:
        match e:
            case Var(name):
                return gamma.get(name)
            case In(ann, _):
                return ann
            case Inl(_, ann) | Inr(_, ann):
                return ann
            case Pair(left, right):
                a = self._synth_term(gamma, delta, left)
                b = self._synth_term(gamma, delta, right) if a is not None else None
                return And(a, b) if b is not None else None
            case NotIntro(body):
                a = self._synth_coterm(gamma, delta, body)
                return Not(a) if a is not None else None
        return None

    def _synth_coterm(self, gamma: Context, delta: Context, e: Coterm) -> Optional[TypeExpr]:
        match e:
            case Covar(name):
                return delta.get(name)
            case Out(ann, _):
                return ann
            case Fst(_, ann) | Snd(_, ann):
                return ann
            case Case(left, right):
                a = self._synth_coterm(gamma, delta, left)
                b = self._synth_coterm(gamma, delta, right) if a is not None else None
                return Or(a, b) if b is not None else None
            case NotElim(body):
                a = self._synth_term(gamma, delta, body)
                return Not(a) if a is not None else None
        return None

    # ------------------------------------------------------------------
    # 收尾
    # ------------------------------------------------------------------

    def _drain(self) -> None:
        while self.pending:
            progressed = False
            for item in list(self.pending):
                if isinstance(self.unifier.resolve(item.type), Meta):
                    continue
                self.pending.remove(item)
                if item.expr.sort is Sort.TERM:
                    item.node = self._term_rules(
                        item.gamma, item.delta, item.expr, item.type, item.path
                    )
                else:
                    item.node = self._coterm_rules(
                        item.gamma, item.delta, item.expr, item.type, item.path
                    )
                progressed = True
            if not progressed:
                raise MissingAnnotation(self.pending[0].path, "cut type")

    def _check_eigenvariables(self) -> None:
        for eigen, gamma, delta, path in self.eigen_checks:
            for ty in list(gamma.values()) + list(delta.values()):
                if eigen in free_type_vars(self.unifier.zonk(ty)):
                    raise EigenvariableCapture(eigen, path)

    def _ground(self, ty: TypeExpr) -> TypeExpr:
        ty = self.unifier.zonk(ty)

        def visit(t: TypeExpr) -> TypeExpr:
            match t:
                case Meta(ident):
                    if ident not in self.grounding:
                        self.grounding[ident] = TyVar(self.supply.fresh_type("T"))
                    return self.grounding[ident]
                case And(left, right):
                    return And(visit(left), visit(right))
                case Or(left, right):
                    return Or(visit(left), visit(right))
                case Not(body):
                    return Not(visit(body))
                case Quantified(binder=binder, body=body):
                    return type(t)(binder, visit(body))
            return t

        return visit(ty)

    def _ground_contexts(self, gamma: Context, delta: Context) -> tuple[Context, Context]:
        key = id(gamma) ^ (id(delta) << 1)
        cached = self._ctx_cache.get(key)
        if cached is not None and cached[0] is gamma and cached[1] is delta:
            return cached[2], cached[3]
        result = (gamma.map_types(self._ground), delta.map_types(self._ground))
        self._ctx_cache[key] = (gamma, delta, *result)
        return result

    def _freeze(self, node: _Result) -> Derivation:
        if isinstance(node, _Deferred):
            node = node.node
        premises = tuple(self._freeze(p) for p in node.premises)
        gamma, delta = self._ground_contexts(node.gamma, node.delta)
        conclusion = Judgment(
            gamma,
            delta,
            node.expr,
            self._ground(node.type) if node.type is not None else None,
            self.system,
        )
        witness = self._ground(node.witness) if node.witness is not None else None
        return Derivation(node.rule, conclusion, premises, node.eigen, witness)



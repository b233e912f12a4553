"""
函子映射 mono

给定 x:A ⊢ M:B 与 N:C[A]（X 在 C 中正出现），构造 C[B] 类型的项 mono^{X.C}_{A,B,x.M}{N}。
余项版本通过对偶得到。按 ‖C‖_X 归纳展开，每次递归调用都断言度量严格下降。
"""

from __future__ import annotations

from dataclasses import dataclass, field

from ..duality.involution import dual_expr, dual_type
from ..errors import MonoError
from ..syntax.names import Name, NameSupply
from ..syntax.terms import (
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
    Term,
    Var,
)
from ..syntax.traversal import all_names, expr_type_names
from ..syntax.types import (
    And,
    Exists,
    Forall,
    Mu,
    Not,
    Nu,
    Or,
    TypeExpr,
    TyVar,
    all_type_names,
    free_type_vars,
    subst_type,
)
from .measure import measure


@dataclass(frozen=True)
class MonoRequest:
    """
    mono 的一次调用

    Args:
        x: 被映射的类型变量 X
        c: 上下文类型 C
        a: 定义域类型 A
        b: 值域类型 B
        binder: 体中绑定的变量 x（项版本）或余变量 α（余项版本）
        body: 项 M 或余项 K
        argument: 项 N 或余项 L
        supply: 新名字供给
    """

    x: str
    c: TypeExpr
    a: TypeExpr
    b: TypeExpr
    binder: Name
    body: Expr
    argument: Expr
    supply: NameSupply = field(default_factory=NameSupply, compare=False)

    def __post_init__(self):
        if self.x in free_type_vars(self.a) | free_type_vars(self.b):
            raise MonoError(f"{self.x} 不能在 A 或 B 中自由出现")
        if self.body.sort is not self.argument.sort:
            raise MonoError("体与参数必须同为项或同为余项")
        if self.binder.is_variable != (self.body.sort is Sort.TERM):
            raise MonoError("项版本绑定变量，余项版本绑定余变量")


def _reserve(req: MonoRequest) -> None:
    supply = req.supply
    supply.reserve(all_names(req.body) | all_names(req.argument) | {req.binder})
    supply.reserve(expr_type_names(req.body) | expr_type_names(req.argument))
    for t in (req.c, req.a, req.b):
        supply.reserve(all_type_names(t))
    supply.reserve((req.x,))


def mono_term(req: MonoRequest) -> Term:
    if req.body.sort is not Sort.TERM:
        raise MonoError("mono_term 需要项版本的请求")
    _reserve(req)
    return _mono(req.x, req.c, req.a, req.b, req.binder, req.body, req.argument, req.supply)


def mono_coterm(req: MonoRequest) -> Coterm:
    """mono^{X.C}_{A,B,α.K}{L} = (mono^{X.C°}_{B°,A°,α′.K°}{L°})°"""
    if req.body.sort is not Sort.COTERM:
        raise MonoError("mono_coterm 需要余项版本的请求")
    _reserve(req)
    image = _mono(
        req.x,
        dual_type(req.c),
        dual_type(req.b),
        dual_type(req.a),
        req.binder.toggle(),
        dual_expr(req.body),
        dual_expr(req.argument),
        req.supply,
    )
    return dual_expr(image)


def mono(req: MonoRequest) -> Expr:
    return mono_term(req) if req.body.sort is Sort.TERM else mono_coterm(req)


def _mono(
    x: str,
    c: TypeExpr,
    a: TypeExpr,
    b: TypeExpr,
    binder: Name,
    body: Term,
    arg: Term,
    supply: NameSupply,
) -> Term:
    size = measure(c, x)
    if size == 0:
        return arg

    def recurse(c1: TypeExpr, a1: TypeExpr, b1: TypeExpr, arg1: Term) -> Term:
        assert measure(c1, x) < size, f"mono 的度量没有下降: {c1}"
        return _mono(x, c1, a1, b1, binder, body, arg1, supply)

    c_a = subst_type(c, a, x)
    c_b = subst_type(c, b, x)
    match c:
        case TyVar():
            alpha = supply.fresh_covar("a")
            return BindCo(
                Cut(arg, BindVar(binder, Cut(body, Covar(alpha), ann=b)), ann=a), alpha
            )
        case And(left, right):
            alpha = supply.fresh_covar("a")
            beta = supply.fresh_covar("b")
            first = BindCo(Cut(arg, Fst(Covar(alpha)), ann=c_a), alpha)
            second = BindCo(Cut(arg, Snd(Covar(beta)), ann=c_a), beta)
            return Pair(recurse(left, a, b, first), recurse(right, a, b, second))
        case Or(left, right):
            y = supply.fresh_var("y")
            z = supply.fresh_var("z")
            gamma = supply.fresh_covar("c")
            branch_l = BindVar(
                y, Cut(Inl(recurse(left, a, b, Var(y)), ann=c_b), Covar(gamma))
            )
            branch_r = BindVar(
                z, Cut(Inr(recurse(right, a, b, Var(z)), ann=c_b), Covar(gamma))
            )
            return BindCo(Cut(arg, Case(branch_l, branch_r), ann=c_a), gamma)
        case Not(inner):
            z = supply.fresh_var("z")
            swapped = recurse(inner, b, a, Var(z))
            return NotIntro(BindVar(z, Cut(arg, NotElim(swapped), ann=c_a)))
        case Mu(y_name, inner):
            mu_b = c_b
            unfolded = subst_type(inner, mu_b, y_name)
            alpha = supply.fresh_covar("a")
            beta = supply.fresh_covar("b")
            z = supply.fresh_var("z")
            step = BindVar(
                z,
                Cut(In(mu_b, recurse(unfolded, a, b, Var(z))), Covar(alpha), ann=mu_b),
            )
            return BindCo(Cut(arg, Itr(mu_b, alpha, step, Covar(beta)), ann=c_a), beta)
        case Nu(y_name, inner):
            nu_a = c_a
            unfolded = subst_type(inner, nu_a, y_name)
            alpha = supply.fresh_covar("a")
            z = supply.fresh_var("z")
            seed = BindCo(Cut(Var(z), Out(nu_a, Covar(alpha)), ann=nu_a), alpha)
            return Coitr(nu_a, z, recurse(unfolded, a, b, seed), arg)
        case Forall() | Exists():
            raise MonoError(f"mono 不支持二阶量词: {c}")
    raise MonoError(f"未知类型: {c!r}")


def mono_request(
    x: str,
    c: TypeExpr,
    a: TypeExpr,
    b: TypeExpr,
    binder: Name,
    body: Expr,
    argument: Expr,
    supply: NameSupply | None = None,
) -> MonoRequest:
    return MonoRequest(x, c, a, b, binder, body, argument, supply or NameSupply())



"""推导树与规则名"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterator, Optional

from ..syntax.terms import (
    BindCo,
    BindVar,
    Case,
    Coitr,
    Covar,
    Cut,
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
    TyAbs,
    TyInst,
    TyPack,
    TyUnpack,
    Var,
)
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
    free_type_vars,
    subst_type,
    type_alpha_eq,
)
from .context import Judgment


class RuleName(str, Enum):
    AX_R = "AxR"
    AX_L = "AxL"
    AND_R = "∧R"
    OR_L = "∨L"
    OR_R1 = "∨R1"
    AND_L1 = "∧L1"
    OR_R2 = "∨R2"
    AND_L2 = "∧L2"
    NOT_R = "¬R"
    NOT_L = "¬L"
    I_R = "IR"
    I_L = "IL"
    CUT = "Cut"
    MU_R = "μR"
    MU_L = "μL"
    NU_L = "νL"
    NU_R = "νR"
    FORALL_R = "∀R"
    FORALL_L = "∀L"
    EXISTS_R = "∃R"
    EXISTS_L = "∃L"
    # 仅供测试的带撇规则
    FORALL_R_PRIMED = "∀R′"
    FORALL_L_PRIMED = "∀L′"
    EXISTS_R_PRIMED = "∃R′"
    EXISTS_L_PRIMED = "∃L′"

    def __str__(self) -> str:
        return self.value


PRIMED_RULES = frozenset(
    {
        RuleName.FORALL_R_PRIMED,
        RuleName.FORALL_L_PRIMED,
        RuleName.EXISTS_R_PRIMED,
        RuleName.EXISTS_L_PRIMED,
    }
)

# 每条规则对应的主表达式构造子
RULE_CONSTRUCTORS: dict[RuleName, type] = {
    RuleName.AX_R: Var,
    RuleName.AX_L: Covar,
    RuleName.AND_R: Pair,
    RuleName.OR_L: Case,
    RuleName.OR_R1: Inl,
    RuleName.AND_L1: Fst,
    RuleName.OR_R2: Inr,
    RuleName.AND_L2: Snd,
    RuleName.NOT_R: NotIntro,
    RuleName.NOT_L: NotElim,
    RuleName.I_R: BindCo,
    RuleName.I_L: BindVar,
    RuleName.CUT: Cut,
    RuleName.MU_R: In,
    RuleName.MU_L: Itr,
    RuleName.NU_L: Out,
    RuleName.NU_R: Coitr,
    RuleName.FORALL_R: TyAbs,
    RuleName.FORALL_L: TyInst,
    RuleName.EXISTS_R: TyPack,
    RuleName.EXISTS_L: TyUnpack,
}


@dataclass(frozen=True)
class Derivation:
    """
    推导树节点

    Args:
        rule: 规则名
        conclusion: 结论判断
        premises: 前提推导
        eigenvariable: (∀R)/(∃L) 及其带撇版本使用的特征变量
        witness: (∀L)/(∃R) 及其带撇版本使用的实例类型
    """

    rule: RuleName
    conclusion: Judgment
    premises: tuple["Derivation", ...] = ()
    eigenvariable: Optional[str] = None
    witness: Optional[TypeExpr] = None

    def walk(self) -> Iterator["Derivation"]:
        yield self
        for premise in self.premises:
            yield from premise.walk()

    def rules(self) -> list[RuleName]:
        return [node.rule for node in self.walk()]

    @property
    def size(self) -> int:
        return sum(1 for _ in self.walk())

    def render(self, indent: int = 0) -> str:
        """以缩进文本展示推导树"""
        lines = [f"{'  ' * indent}({self.rule}) {self.conclusion}"]
        for premise in self.premises:
            lines.append(premise.render(indent + 1))
        return "\n".join(lines)

    def validate(self) -> list[str]:
        """逐节点复核规则实例，返回发现的问题（空列表表示通过）"""
        problems: list[str] = []
        for node in self.walk():
            problem = _check_node(node)
            if problem:
                problems.append(f"({node.rule}) {node.conclusion}: {problem}")
        return problems


def _same(a: Optional[TypeExpr], b: Optional[TypeExpr]) -> bool:
    return a is not None and b is not None and type_alpha_eq(a, b)


def _check_node(node: Derivation) -> Optional[str]:
    j = node.conclusion
    e = j.principal
    rule = node.rule
    prem = node.premises
    if rule in PRIMED_RULES:
        return _check_primed(node)
    expected_cls = RULE_CONSTRUCTORS[rule]
    if type(e) is not expected_cls:
        return f"主表达式不是 {expected_cls.__name__}"
    ty = j.type
    for p in prem:
        if p.conclusion.system is not j.system:
            return "前提的系统不同"

    def same_ctx(p: Derivation) -> bool:
        return p.conclusion.gamma == j.gamma and p.conclusion.delta == j.delta

    match rule:
        case RuleName.AX_R:
            return None if _same(j.gamma.get(e.name), ty) else "变量类型与上下文不符"
        case RuleName.AX_L:
            return None if _same(j.delta.get(e.name), ty) else "余变量类型与上下文不符"
        case RuleName.AND_R | RuleName.OR_L:
            cls = And if rule is RuleName.AND_R else Or
            if not isinstance(ty, cls) or len(prem) != 2 or not all(map(same_ctx, prem)):
                return "形状不符"
            ok = _same(prem[0].conclusion.type, ty.left)
            ok = ok and _same(prem[1].conclusion.type, ty.right)
            return None if ok else "分量类型不符"
        case RuleName.OR_R1 | RuleName.OR_R2 | RuleName.AND_L1 | RuleName.AND_L2:
            cls = Or if rule in (RuleName.OR_R1, RuleName.OR_R2) else And
            if not isinstance(ty, cls) or len(prem) != 1 or not same_ctx(prem[0]):
                return "形状不符"
            part = ty.left if rule in (RuleName.OR_R1, RuleName.AND_L1) else ty.right
            return None if _same(prem[0].conclusion.type, part) else "分量类型不符"
        case RuleName.NOT_R | RuleName.NOT_L:
            if not isinstance(ty, Not) or len(prem) != 1 or not same_ctx(prem[0]):
                return "形状不符"
            return None if _same(prem[0].conclusion.type, ty.body) else "否定体类型不符"
        case RuleName.I_R:
            p = prem[0].conclusion
            ok = p.gamma == j.gamma and p.delta == j.delta.extend(e.binder, ty)
            return None if ok else "绑定余变量的上下文不符"
        case RuleName.I_L:
            p = prem[0].conclusion
            ok = p.delta == j.delta and p.gamma == j.gamma.extend(e.binder, ty)
            return None if ok else "绑定变量的上下文不符"
        case RuleName.CUT:
            if len(prem) != 2 or not all(map(same_ctx, prem)):
                return "形状不符"
            return None if _same(prem[0].conclusion.type, prem[1].conclusion.type) else "切割类型不一致"
        case RuleName.MU_R | RuleName.NU_L:
            cls = Mu if rule is RuleName.MU_R else Nu
            if not isinstance(ty, cls) or not _same(e.ann, ty) or not same_ctx(prem[0]):
                return "注解与类型不符"
            unfolded = subst_type(ty.body, ty, ty.binder)
            return None if _same(prem[0].conclusion.type, unfolded) else "展开类型不符"
        case RuleName.MU_L | RuleName.NU_R:
            cls = Mu if rule is RuleName.MU_L else Nu
            if not isinstance(ty, cls) or len(prem) != 2:
                return "形状不符"
            carrier = e.ann
            step, rest = prem[0].conclusion, prem[1].conclusion
            if rule is RuleName.MU_L:
                ctx_ok = step.gamma == j.gamma and step.delta == j.delta.extend(e.binder, carrier)
            else:
                ctx_ok = step.delta == j.delta and step.gamma == j.gamma.extend(e.binder, carrier)
            ok = (
                ctx_ok
                and same_ctx(prem[1])
                and _same(step.type, subst_type(ty.body, carrier, ty.binder))
                and _same(rest.type, carrier)
            )
            return None if ok else "迭代/余迭代前提不符"
        case RuleName.FORALL_R | RuleName.EXISTS_L:
            cls = Forall if rule is RuleName.FORALL_R else Exists
            eigen = node.eigenvariable
            if not isinstance(ty, cls) or eigen is None or not same_ctx(prem[0]):
                return "形状不符"
            declared = list(j.gamma.values()) + list(j.delta.values())
            if any(eigen in free_type_vars(t) for t in declared):
                return "特征变量条件不满足"
            body = subst_type(ty.body, TyVar(eigen), ty.binder)
            return None if _same(prem[0].conclusion.type, body) else "体类型不符"
        case RuleName.FORALL_L | RuleName.EXISTS_R:
            cls = Forall if rule is RuleName.FORALL_L else Exists
            witness = node.witness
            if not isinstance(ty, cls) or witness is None or not same_ctx(prem[0]):
                return "形状不符"
            body = subst_type(ty.body, witness, ty.binder)
            return None if _same(prem[0].conclusion.type, body) else "实例化类型不符"
    return None


def _check_primed(node: Derivation) -> Optional[str]:
    j = node.conclusion
    ty = j.type
    if len(node.premises) != 1:
        return "形状不符"
    p = node.premises[0].conclusion
    if p.principal != j.principal or p.gamma != j.gamma or p.delta != j.delta:
        return "带撇规则不改变主表达式与上下文"
    if node.rule in (RuleName.FORALL_R_PRIMED, RuleName.EXISTS_L_PRIMED):
        cls = Forall if node.rule is RuleName.FORALL_R_PRIMED else Exists
        if not isinstance(ty, cls):
            return "形状不符"
        body = subst_type(ty.body, TyVar(node.eigenvariable or ty.binder), ty.binder)
        return None if _same(p.type, body) else "体类型不符"
    cls = Forall if node.rule is RuleName.FORALL_L_PRIMED else Exists
    if not isinstance(ty, cls) or node.witness is None:
        return "形状不符"
    return None if _same(p.type, subst_type(ty.body, node.witness, ty.binder)) else "实例化类型不符"

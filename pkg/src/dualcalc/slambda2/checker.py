"""
Sλ2 的类型检查

综合与检查两个方向：变量、带注解的 λ、t*u、带特征变量的 a(t) 可以综合类型；
inj、e(t) 以及不带注解的 λ 只能按期望类型检查。
"""

from __future__ import annotations

from typing import Mapping, Optional

from ..errors import EigenvariableCapture, MissingAnnotation, TypeMismatch, UnboundVariable
from .terms import App, Inj1, Inj2, Lam, SLTerm, SPair, SVar, TAbs, TPack
from .types import (
    BOTTOM,
    Bottom,
    ExistsT,
    ForallT,
    MType,
    MVar,
    Prod,
    SLType,
    Sum,
    mfree_vars,
    msubst,
    mtype_eq,
    neg,
)

Path = tuple[int, ...]
SLContext = Mapping[str, MType]


def _context_vars(ctx: SLContext) -> frozenset[str]:
    names: frozenset[str] = frozenset()
    for ty in ctx.values():
        names |= mfree_vars(ty)
    return names


def _extend(ctx: SLContext, name: str, ty: MType) -> dict[str, MType]:
    extended = dict(ctx)
    extended[name] = ty
    return extended


def _fresh_type_var(hint: str, avoid: frozenset[str]) -> str:
    stem = hint.rstrip("0123456789") or "Z"
    counter = 1
    while f"{stem}{counter}" in avoid:
        counter += 1
    return f"{stem}{counter}"


class _SLChecker:
    def synth(self, ctx: SLContext, t: SLTerm, path: Path) -> Optional[SLType]:
        match t:
            case SVar(name):
                if name not in ctx:
                    raise UnboundVariable(name, path)
                return ctx[name]
            case Lam(binder, body, ann) if ann is not None:
                self.check(_extend(ctx, binder, ann), body, BOTTOM, path + (0,))
                return neg(ann)
            case App():
                self.app(ctx, t, path)
                return BOTTOM
            case SPair(left, right):
                lt = self.synth(ctx, left, path + (0,))
                rt = self.synth(ctx, right, path + (1,))
                if isinstance(lt, MType) and isinstance(rt, MType):
                    return Prod(lt, rt)
                if isinstance(lt, Bottom) or isinstance(rt, Bottom):
                    raise TypeMismatch(path, "m-类型的分量", BOTTOM)
                return None
            case TAbs(body, eigen) if eigen is not None:
                if eigen in _context_vars(ctx):
                    raise EigenvariableCapture(eigen, path)
                inner = self.synth(ctx, body, path + (0,))
                if isinstance(inner, MType):
                    return ForallT(eigen, inner)
                if isinstance(inner, Bottom):
                    raise TypeMismatch(path + (0,), "m-类型", BOTTOM)
                return None
        return None

    def check(self, ctx: SLContext, t: SLTerm, ty: SLType, path: Path) -> None:
        if isinstance(ty, Bottom):
            if not isinstance(t, App):
                raise TypeMismatch(path, BOTTOM, type(t).__name__)
            self.app(ctx, t, path)
            return
        match t:
            case Lam(binder, body, ann):
                domain = neg(ty)
                if ann is not None and not mtype_eq(ann, domain):
                    raise TypeMismatch(path, domain, ann)
                self.check(_extend(ctx, binder, domain), body, BOTTOM, path + (0,))
                return
            case Inj1(body) | Inj2(body):
                if not isinstance(ty, Sum):
                    raise TypeMismatch(path, ty, "τ1 + τ2")
                part = ty.left if isinstance(t, Inj1) else ty.right
                self.check(ctx, body, part, path + (0,))
                return
            case SPair(left, right):
                if not isinstance(ty, Prod):
                    raise TypeMismatch(path, ty, "τ × σ")
                self.check(ctx, left, ty.left, path + (0,))
                self.check(ctx, right, ty.right, path + (1,))
                return
            case TAbs(body, eigen):
                if not isinstance(ty, ForallT):
                    raise TypeMismatch(path, ty, "∀X.τ")
                in_context = _context_vars(ctx)
                z = eigen or ty.binder
                if z in in_context:
                    if eigen is not None:
                        raise EigenvariableCapture(eigen, path)
                    z = _fresh_type_var(z, in_context | mfree_vars(ty.body) | {ty.binder})
                body_ty = ty.body if z == ty.binder else msubst(ty.body, MVar(z), ty.binder)
                self.check(ctx, body, body_ty, path + (0,))
                return
            case TPack(body, witness):
                if not isinstance(ty, ExistsT):
                    raise TypeMismatch(path, ty, "∃X.τ")
                if witness is None:
                    raise MissingAnnotation(path, "∀/∃ witness")
                self.check(ctx, body, msubst(ty.body, witness, ty.binder), path + (0,))
                return
        found = self.synth(ctx, t, path)
        if found is None:
            raise MissingAnnotation(path, "type")
        if not mtype_eq(found, ty):
            raise TypeMismatch(path, ty, found)

    def app(self, ctx: SLContext, t: App, path: Path) -> None:
        left_path, right_path = path + (0,), path + (1,)
        if t.ann is not None:
            self.check(ctx, t.left, t.ann, left_path)
            self.check(ctx, t.right, neg(t.ann), right_path)
            return
        lt = self.synth(ctx, t.left, left_path)
        if isinstance(lt, Bottom):
            raise TypeMismatch(left_path, "m-类型", BOTTOM)
        if lt is not None:
            self.check(ctx, t.right, neg(lt), right_path)
            return
        rt = self.synth(ctx, t.right, right_path)
        if isinstance(rt, Bottom):
            raise TypeMismatch(right_path, "m-类型", BOTTOM)
        if rt is not None:
            self.check(ctx, t.left, neg(rt), left_path)
            return
        raise MissingAnnotation(path, "t*u 左侧类型")


def check_sl(gamma: SLContext, t: SLTerm, expected: Optional[SLType] = None) -> SLType:
    """
    检查 Γ ⊢ t : τ 或 Γ ⊢ t : ⊥

    Args:
        gamma: 变量到 m-类型的映射
        t: 项
        expected: 期望类型；为 None 时综合类型

    Returns:
        t 的类型
    """
    checker = _SLChecker()
    if expected is not None:
        checker.check(gamma, t, expected, ())
        return expected
    found = checker.synth(gamma, t, ())
    if found is None:
        raise MissingAnnotation((), "type")
    return found


def is_sl_typable(gamma: SLContext, t: SLTerm, expected: Optional[SLType] = None) -> bool:
    try:
        check_sl(gamma, t, expected)
    except (TypeMismatch, MissingAnnotation, UnboundVariable, EigenvariableCapture):
        return False
    return True

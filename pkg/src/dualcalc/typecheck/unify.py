"""类型元变量的一阶合一（绑定子按 alpha 改名比较，并做逃逸检查）"""

from __future__ import annotations

from ..syntax.types import (
    And,
    Meta,
    Not,
    Or,
    Quantified,
    TypeExpr,
    TyVar,
    free_type_vars,
    iter_subtypes,
)


class Unifier:
    """元变量存储与合一"""

    def __init__(self):
        self._solutions: dict[int, TypeExpr] = {}
        self._next = 0

    def fresh(self) -> Meta:
        self._next += 1
        return Meta(self._next)

    def snapshot(self) -> tuple[dict[int, TypeExpr], int]:
        return dict(self._solutions), self._next

    def restore(self, snap: tuple[dict[int, TypeExpr], int]) -> None:
        self._solutions = dict(snap[0])
        self._next = snap[1]

    def resolve(self, t: TypeExpr) -> TypeExpr:
        """只展开顶层的元变量"""
        while isinstance(t, Meta) and t.ident in self._solutions:
            t = self._solutions[t.ident]
        return t

    def zonk(self, t: TypeExpr) -> TypeExpr:
        """展开所有已求解的元变量"""
        t = self.resolve(t)
        match t:
            case And(left, right):
                return And(self.zonk(left), self.zonk(right))
            case Or(left, right):
                return Or(self.zonk(left), self.zonk(right))
            case Not(body):
                return Not(self.zonk(body))
            case Quantified(binder=binder, body=body):
                return type(t)(binder, self.zonk(body))
        return t

    def unify(self, a: TypeExpr, b: TypeExpr) -> bool:
        return self._unify(a, b, ())

    def _unify(self, a: TypeExpr, b: TypeExpr, bound: tuple[tuple[str, str], ...]) -> bool:
        a = self.resolve(a)
        b = self.resolve(b)
        if isinstance(a, Meta) and isinstance(b, Meta) and a.ident == b.ident:
            return True
        if isinstance(a, Meta):
            return self._bind(a, b, bound)
        if isinstance(b, Meta):
            return self._bind(b, a, bound)
        match a, b:
            case TyVar(x), TyVar(y):
                for left, right in reversed(bound):
                    if left == x or right == y:
                        return left == x and right == y
                return x == y
            case (And(l1, r1), And(l2, r2)) | (Or(l1, r1), Or(l2, r2)):
                return self._unify(l1, l2, bound) and self._unify(r1, r2, bound)
            case Not(b1), Not(b2):
                return self._unify(b1, b2, bound)
            case Quantified(), Quantified() if type(a) is type(b):
                return self._unify(a.body, b.body, bound + ((a.binder, b.binder),))
        return False

    def _bind(self, meta: Meta, t: TypeExpr, bound: tuple[tuple[str, str], ...]) -> bool:
        t = self.zonk(t)
        if any(isinstance(s, Meta) and s.ident == meta.ident for s in iter_subtypes(t)):
            return False
        scoped = {name for pair in bound for name in pair}
        if free_type_vars(t) & scoped:
            return False
        self._solutions[meta.ident] = t
        return True

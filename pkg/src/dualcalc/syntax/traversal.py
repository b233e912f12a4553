"""
表达式遍历：子节点、位置路径、自由名字、避免捕获的替换、alpha 等价

位置路径是子节点下标组成的元组，按前序（外层优先、自左向右）编号。
"""

from __future__ import annotations

from dataclasses import replace
from typing import Callable, Iterator, Optional, Sequence

from .names import Name, NameSupply
from .terms import (
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
    Term,
    TyAbs,
    TyInst,
    TyPack,
    TyUnpack,
    Var,
)
from .types import (
    TypeExpr,
    TyVar,
    all_type_names,
    free_type_vars,
    subst_type,
    type_key,
)

Path = tuple[int, ...]

# 每个构造子的子表达式字段（按位置顺序）
CHILD_FIELDS: dict[type, tuple[str, ...]] = {
    Var: (),
    Covar: (),
    Pair: ("left", "right"),
    Inl: ("body",),
    Inr: ("body",),
    NotIntro: ("body",),
    BindCo: ("body",),
    In: ("body",),
    Coitr: ("step", "seed"),
    TyAbs: ("body",),
    TyPack: ("body",),
    Case: ("left", "right"),
    Fst: ("body",),
    Snd: ("body",),
    NotElim: ("body",),
    BindVar: ("body",),
    Out: ("body",),
    Itr: ("step", "cont"),
    TyInst: ("body",),
    TyUnpack: ("body",),
    Cut: ("term", "coterm"),
}

# 绑定名字的构造子：被绑定的总是第 0 个子表达式
BINDING_CONSTRUCTORS = (BindCo, BindVar, Coitr, Itr)

# 可选注解字段（alpha 等价默认忽略）
OPTIONAL_TYPE_FIELDS: dict[type, tuple[str, ...]] = {
    Inl: ("ann",),
    Inr: ("ann",),
    Fst: ("ann",),
    Snd: ("ann",),
    TyPack: ("witness",),
    TyInst: ("witness",),
    Cut: ("ann",),
}
MANDATORY_TYPE_FIELDS: dict[type, tuple[str, ...]] = {
    In: ("ann",),
    Out: ("ann",),
    Coitr: ("ann",),
    Itr: ("ann",),
}


def children(e: Expr) -> tuple[Expr, ...]:
    return tuple(getattr(e, f) for f in CHILD_FIELDS[type(e)])


def rebuild(e: Expr, new_children: Sequence[Expr]) -> Expr:
    fields = CHILD_FIELDS[type(e)]
    if all(getattr(e, f) is c for f, c in zip(fields, new_children)):
        return e
    return replace(e, **dict(zip(fields, new_children)))


def bound_name(e: Expr) -> Optional[Name]:
    """e 在第 0 个子表达式中绑定的名字"""
    if isinstance(e, BINDING_CONSTRUCTORS):
        return e.binder
    return None


def positions(e: Expr) -> Iterator[tuple[Path, Expr]]:
    """前序遍历所有 (路径, 子表达式)"""
    stack: list[tuple[Path, Expr]] = [((), e)]
    while stack:
        path, node = stack.pop()
        yield path, node
        kids = children(node)
        for index in range(len(kids) - 1, -1, -1):
            stack.append((path + (index,), kids[index]))


def subexpr_at(e: Expr, path: Sequence[int]) -> Expr:
    node = e
    for index in path:
        node = children(node)[index]
    return node


def replace_at(e: Expr, path: Sequence[int], new: Expr) -> Expr:
    if not path:
        return new
    kids = list(children(e))
    kids[path[0]] = replace_at(kids[path[0]], path[1:], new)
    return rebuild(e, kids)


# ---------------------------------------------------------------------------
# 名字
# ---------------------------------------------------------------------------


def free_names(e: Expr) -> frozenset[Name]:
    return _free_names(e, {})


def _free_names(e: Expr, memo: dict[int, tuple[Expr, frozenset[Name]]]) -> frozenset[Name]:
    cached = memo.get(id(e))
    if cached is not None and cached[0] is e:
        return cached[1]
    if isinstance(e, Var) or isinstance(e, Covar):
        result = frozenset((e.name,))
    else:
        parts: set[Name] = set()
        binder = bound_name(e)
        for index, child in enumerate(children(e)):
            names = _free_names(child, memo)
            if index == 0 and binder is not None:
                names = names - {binder}
            parts |= names
        result = frozenset(parts)
    memo[id(e)] = (e, result)
    return result


def free_vars(e: Expr) -> frozenset[Name]:
    return frozenset(n for n in free_names(e) if n.is_variable)


def free_covars(e: Expr) -> frozenset[Name]:
    return frozenset(n for n in free_names(e) if n.is_covariable)


def all_names(e: Expr) -> frozenset[Name]:
    """出现过的所有名字（含绑定的）"""
    names: set[Name] = set()
    for _, node in positions(e):
        if isinstance(node, (Var, Covar)):
            names.add(node.name)
        binder = bound_name(node)
        if binder is not None:
            names.add(binder)
    return frozenset(names)


def annotations(e: Expr) -> Iterator[TypeExpr]:
    """表达式中出现的全部类型注解"""
    for _, node in positions(e):
        for field in OPTIONAL_TYPE_FIELDS.get(type(node), ()) + MANDATORY_TYPE_FIELDS.get(
            type(node), ()
        ):
            value = getattr(node, field)
            if value is not None:
                yield value


def expr_type_names(e: Expr) -> frozenset[str]:
    names: set[str] = set()
    for ann in annotations(e):
        names |= all_type_names(ann)
    for _, node in positions(e):
        if isinstance(node, (TyAbs, TyUnpack)) and node.eigen is not None:
            names.add(node.eigen)
    return frozenset(names)


def supply_for(*exprs: Expr, seed: int = 0, types: Sequence[TypeExpr] = ()) -> NameSupply:
    """为若干表达式建立新名字供给，避开其中出现的所有名字"""
    supply = NameSupply(seed=seed)
    for e in exprs:
        supply.reserve(all_names(e))
        supply.reserve(expr_type_names(e))
    for t in types:
        supply.reserve(all_type_names(t))
    return supply


# ---------------------------------------------------------------------------
# 替换
# ---------------------------------------------------------------------------


def _leaf(name: Name) -> Expr:
    return Var(name) if name.is_variable else Covar(name)


class _Substituter:
    """同时替换：names -> 表达式，避免捕获"""

    def __init__(self, mapping: dict[Name, Expr], supply: NameSupply):
        self.mapping = mapping
        self.keys = frozenset(mapping)
        self.supply = supply
        self.memo: dict[int, tuple[Expr, frozenset[Name]]] = {}
        self.replacement_fv: frozenset[Name] = frozenset().union(
            *(free_names(r) for r in mapping.values())
        )

    def run(self, e: Expr) -> Expr:
        if isinstance(e, (Var, Covar)):
            return self.mapping.get(e.name, e)
        if not (_free_names(e, self.memo) & self.keys):
            return e
        binder = bound_name(e)
        kids = list(children(e))
        if binder is None:
            return rebuild(e, [self.run(k) for k in kids])
        first = kids[0]
        active = {n: r for n, r in self.mapping.items() if n != binder}
        if binder in self.replacement_fv and _free_names(first, self.memo) & frozenset(active):
            renamed = self.supply.fresh_like(binder)
            first = _Substituter({binder: _leaf(renamed)}, self.supply).run(first)
            e = replace(e, binder=renamed)
            binder = renamed
        inner = self if len(active) == len(self.mapping) else _Substituter(active, self.supply)
        kids[0] = inner.run(first) if active else first
        for index in range(1, len(kids)):
            kids[index] = self.run(kids[index])
        return rebuild(e, kids)


def substitute(
    e: Expr, mapping: dict[Name, Expr], supply: Optional[NameSupply] = None
) -> Expr:
    """同时的避免捕获替换 D[M₁/x₁, …]；变量须映射到项，余变量须映射到余项"""
    for name, value in mapping.items():
        expected = Term if name.is_variable else Coterm
        if not isinstance(value, expected):
            raise TypeError(f"{name} 只能被 {expected.__name__} 替换")
    if not mapping:
        return e
    if supply is None:
        supply = supply_for(e, *mapping.values())
    else:
        supply.reserve(all_names(e))
        for value in mapping.values():
            supply.reserve(all_names(value))
    return _Substituter(dict(mapping), supply).run(e)


def subst_term(d: Expr, m: Term, x: Name, supply: Optional[NameSupply] = None) -> Expr:
    """D[M/x]"""
    if not x.is_variable:
        raise ValueError(f"{x} 不是变量")
    return substitute(d, {x: m}, supply)


def subst_coterm(d: Expr, k: Coterm, a: Name, supply: Optional[NameSupply] = None) -> Expr:
    """D[K/α]"""
    if not a.is_covariable:
        raise ValueError(f"{a} 不是余变量")
    return substitute(d, {a: k}, supply)


def rename_free(e: Expr, old: Name, new: Name, supply: Optional[NameSupply] = None) -> Expr:
    return substitute(e, {old: _leaf(new)}, supply)


def map_annotations(e: Expr, fn: Callable[[TypeExpr], TypeExpr]) -> Expr:
    """对所有类型注解应用 fn（不跨越特征变量绑定的检查由调用方负责）"""
    updates = {}
    for field in OPTIONAL_TYPE_FIELDS.get(type(e), ()) + MANDATORY_TYPE_FIELDS.get(type(e), ()):
        value = getattr(e, field)
        if value is not None:
            updates[field] = fn(value)
    node = replace(e, **updates) if updates else e
    kids = children(node)
    if not kids:
        return node
    return rebuild(node, [map_annotations(k, fn) for k in kids])


def subst_type_in_expr(e: Expr, b: TypeExpr, x: str) -> Expr:
    """把注解中的自由类型变量 X 换成 B；特征变量提示按绑定处理"""
    if isinstance(e, (TyAbs, TyUnpack)) and e.eigen is not None:
        if e.eigen == x:
            return e
        if e.eigen in free_type_vars(b):
            avoid = free_type_vars(b) | expr_type_names(e) | {x}
            renamed = _fresh_eigen(e.eigen, avoid)
            body = subst_type_in_expr(e.body, TyVar(renamed), e.eigen)
            e = replace(e, body=body, eigen=renamed)
    updates = {}
    for field in OPTIONAL_TYPE_FIELDS.get(type(e), ()) + MANDATORY_TYPE_FIELDS.get(type(e), ()):
        value = getattr(e, field)
        if value is not None:
            updates[field] = subst_type(value, b, x)
    node = replace(e, **updates) if updates else e
    kids = children(node)
    if not kids:
        return node
    return rebuild(node, [subst_type_in_expr(k, b, x) for k in kids])


def _fresh_eigen(hint: str, avoid: frozenset[str] | set[str]) -> str:
    from .types import fresh_type_name

    return fresh_type_name(hint, avoid)


# ---------------------------------------------------------------------------
# alpha 等价
# ---------------------------------------------------------------------------


def alpha_key(e: Expr, annotated: bool = False) -> tuple:
    """
    de Bruijn 形式的键

    Args:
        e: 表达式
        annotated: 是否把可选注解也纳入比较（默认忽略）
    """
    return _alpha_key(e, {}, 0, {}, 0, annotated)


def _ann_key(value: Optional[TypeExpr], tenv: dict[str, int], tdepth: int) -> object:
    if value is None:
        return None
    if tenv:
        # 特征变量提示绑定了注解中的类型变量
        from .types import map_type_vars

        value = map_type_vars(
            value, lambda n: TyVar(f"#{tdepth - tenv[n]}") if n in tenv else TyVar(n)
        )
    return type_key(value)


def _alpha_key(
    e: Expr,
    env: dict[Name, int],
    depth: int,
    tenv: dict[str, int],
    tdepth: int,
    annotated: bool,
) -> tuple:
    cls = type(e)
    if cls is Var or cls is Covar:
        level = env.get(e.name)
        if level is None:
            return ("free", str(e.name))
        return ("bound", depth - level)
    head: list[object] = [cls.__name__]
    for field in MANDATORY_TYPE_FIELDS.get(cls, ()):
        head.append(_ann_key(getattr(e, field), tenv, tdepth))
    if annotated:
        for field in OPTIONAL_TYPE_FIELDS.get(cls, ()):
            head.append(_ann_key(getattr(e, field), tenv, tdepth))
    if annotated and isinstance(e, (TyAbs, TyUnpack)) and e.eigen is not None:
        tenv = dict(tenv)
        tdepth += 1
        tenv[e.eigen] = tdepth
        head.append("eigen")
    binder = bound_name(e)
    for index, child in enumerate(children(e)):
        if index == 0 and binder is not None:
            inner = dict(env)
            inner[binder] = depth + 1
            head.append(_alpha_key(child, inner, depth + 1, tenv, tdepth, annotated))
        else:
            head.append(_alpha_key(child, env, depth, tenv, tdepth, annotated))
    return tuple(head)


def alpha_eq(d: Expr, e: Expr, annotated: bool = False) -> bool:
    """alpha 等价（默认忽略可选注解）"""
    return d == e or alpha_key(d, annotated) == alpha_key(e, annotated)

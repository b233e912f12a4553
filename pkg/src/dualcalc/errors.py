"""异常层次

所有库代码抛出的异常都继承自 DualCalcError，并带有稳定的机器可读 code。
燃料耗尽、图探索触顶属于“状态”，不在这里。
"""

from __future__ import annotations

from typing import Any, Optional, Sequence


def _format_path(path: Optional[Sequence[int]]) -> str:
    if path is None:
        return "?"
    return ".".join(str(i) for i in path) if path else "ε"


class DualCalcError(Exception):
    """dualcalc 异常基类"""

    code = "error"

    def __init__(self, message: str):
        super().__init__(message)
        self.message = message

    def to_dict(self) -> dict[str, Any]:
        return {"code": self.code, "message": self.message}


class DualCalcSyntaxError(DualCalcError):
    """语法错误（带行列号）"""

    code = "syntax"

    def __init__(self, message: str, line: Optional[int] = None, column: Optional[int] = None):
        where = f"第 {line} 行第 {column} 列: " if line is not None else ""
        super().__init__(f"{where}{message}")
        self.line = line
        self.column = column


class DefinitionError(DualCalcError):
    """源文件定义错误：未知、重复或循环引用"""

    code = "definition"


class IllFormedType(DualCalcError):
    """类型不合法"""

    code = "ill_formed_type"


class NegativeOccurrence(IllFormedType):
    """μ/ν 绑定变量在体中出现在负位置"""

    code = "negative_occurrence"

    def __init__(self, binder: str, path: Sequence[int]):
        super().__init__(f"类型变量 {binder} 在 μ/ν 体中不是正出现 (位置 {_format_path(path)})")
        self.binder = binder
        self.path = tuple(path)


class ForbiddenConstructor(IllFormedType):
    """当前演算系统不允许的构造子"""

    code = "forbidden_constructor"

    def __init__(self, system: Any, constructor: str):
        system_name = getattr(system, "value", system)
        super().__init__(f"系统 {system_name} 不允许构造子 {constructor}")
        self.system = system
        self.constructor = constructor


class JudgmentError(DualCalcError):
    """判断形状不合法（主表达式的种类与判断形状不符，或上下文极性错误）"""

    code = "judgment"


class TypeCheckError(DualCalcError):
    """类型检查错误基类"""

    code = "type_error"


class UnboundVariable(TypeCheckError):
    code = "unbound_variable"

    def __init__(self, name: Any, position: Sequence[int]):
        super().__init__(f"未绑定的名字 {name} (位置 {_format_path(position)})")
        self.name = name
        self.position = tuple(position)


class TypeMismatch(TypeCheckError):
    code = "type_mismatch"

    def __init__(self, position: Sequence[int], expected: Any, found: Any):
        super().__init__(
            f"类型不匹配 (位置 {_format_path(position)}): 期望 {expected}, 实际 {found}"
        )
        self.position = tuple(position)
        self.expected = expected
        self.found = found


class MissingAnnotation(TypeCheckError):
    code = "missing_annotation"

    def __init__(self, position: Sequence[int], which: str):
        super().__init__(f"缺少类型注解: {which} (位置 {_format_path(position)})")
        self.position = tuple(position)
        self.which = which


class EigenvariableCapture(TypeCheckError):
    code = "eigenvariable_capture"

    def __init__(self, eigenvariable: str, position: Sequence[int]):
        super().__init__(
            f"特征变量 {eigenvariable} 在上下文中自由出现 (位置 {_format_path(position)})"
        )
        self.eigenvariable = eigenvariable
        self.position = tuple(position)


class InvalidRedex(DualCalcError):
    code = "invalid_redex"

    def __init__(self, path: Sequence[int], rule: Any):
        super().__init__(f"位置 {_format_path(path)} 不是 {rule} 的可约式")
        self.path = tuple(path)
        self.rule = rule


class SetCapHit(DualCalcError):
    code = "set_cap_hit"

    def __init__(self, cap: int):
        super().__init__(f"并行归约集合超过上限 {cap}")
        self.cap = cap


class MonoError(DualCalcError):
    code = "mono"


class TranslationError(DualCalcError):
    code = "translation"

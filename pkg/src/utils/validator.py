"""
数据验证模块 - 异常类型与输入校验函数
"""
from typing import Optional


class ValidationError(Exception):
    """验证错误异常"""
    pass


class PathParseError(ValidationError):
    """路径文本解析错误，position 为第一个非法字符的下标"""

    def __init__(self, message: str, position: int):
        super().__init__(message)
        self.position = position


class PreconditionError(ValidationError):
    """操作前置条件不满足"""

    def __init__(self, operation: str, message: str):
        super().__init__(f"{operation}: {message}")
        self.operation = operation


class LimitExceededError(ValidationError):
    """穷举规模超出配置上限"""
    pass


class ConsistencyError(AssertionError):
    """内部一致性检查失败（说明实现有误）"""
    pass


def sanitize_word(text: str) -> str:
    """
    清理路径文本：去掉首尾空白并转为小写

    Args:
        text: 原始文本

    Returns:
        str: 清理后的文本
    """
    if text is None:
        return ""
    return str(text).strip().lower()


def validate_path_text(text: str) -> tuple[bool, Optional[str]]:
    """
    验证路径文本是否只包含 u/d

    Args:
        text: 路径文本（大小写均可）

    Returns:
        tuple[bool, Optional[str]]: (是否有效, 错误信息)
    """
    if not isinstance(text, str):
        return False, "路径必须是字符串"

    for index, char in enumerate(text):
        if char not in "uUdD":
            return False, f"第 {index} 个字符 {char!r} 不是 u 或 d"

    return True, None


def validate_max_n(max_n: int, cap: int) -> tuple[bool, Optional[str]]:
    """
    验证穷举规模参数

    Args:
        max_n: 请求的最大路径长度
        cap: 配置的上限

    Returns:
        tuple[bool, Optional[str]]: (是否有效, 错误信息)
    """
    if not isinstance(max_n, int) or isinstance(max_n, bool):
        return False, "max-n 必须是整数"

    if max_n < 1:
        return False, "max-n 必须大于 0"

    if max_n > cap:
        return False, f"max-n={max_n} 超出上限 {cap}（可通过 SHIFTED_CHAINS_MAX_N 调整）"

    return True, None


def validate_tableau_rows(shape: list[int], rows: list[list[int]]) -> tuple[bool, Optional[str]]:
    """
    验证表格数据与形状是否匹配（不检查单调性）

    Args:
        shape: 严格分拆 λ
        rows: 各行的元素

    Returns:
        tuple[bool, Optional[str]]: (是否有效, 错误信息)
    """
    for index, part in enumerate(shape):
        if not isinstance(part, int) or isinstance(part, bool) or part <= 0:
            return False, f"形状第 {index + 1} 项必须是正整数"
        if index > 0 and part >= shape[index - 1]:
            return False, "形状必须严格递减"

    if len(rows) != len(shape):
        return False, f"行数 {len(rows)} 与形状长度 {len(shape)} 不一致"

    for index, (row, part) in enumerate(zip(rows, shape)):
        if len(row) != part:
            return False, f"第 {index + 1} 行应有 {part} 个元素，实际 {len(row)} 个"
        for value in row:
            if not isinstance(value, int) or isinstance(value, bool) or value <= 0:
                return False, f"第 {index + 1} 行包含非正整数 {value!r}"

    return True, None


def validate_positive(value: int, name: str) -> tuple[bool, Optional[str]]:
    """
    验证参数为正整数

    Args:
        value: 参数值
        name: 参数名称（用于错误信息）

    Returns:
        tuple[bool, Optional[str]]: (是否有效, 错误信息)
    """
    if not isinstance(value, int) or isinstance(value, bool):
        return False, f"{name} 必须是整数"
    if value < 1:
        return False, f"{name} 必须大于 0"
    return True, None

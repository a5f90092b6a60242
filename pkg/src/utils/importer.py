"""
数据导入模块 - 读取多链文本与表格 JSON（文件或标准输入）
"""
import sys
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, ValidationError as PydanticValidationError, model_validator

from ..config import OUTPUT_ENCODING
from .lattice import Multichain, parse_multichain
from .tableaux import Shape, ShiftedTableau
from .validator import ValidationError, validate_tableau_rows


class TableauPayload(BaseModel):
    """
    表格的 JSON 形式 {"shape": [...], "rows": [[...], ...]}

    shape 可以省略，此时取各行长度。
    """
    shape: Optional[list[int]] = None
    rows: list[list[int]]

    @model_validator(mode="after")
    def check_rows(self) -> "TableauPayload":
        shape = self.shape if self.shape is not None else [len(row) for row in self.rows]
        is_valid, error_msg = validate_tableau_rows(shape, self.rows)
        if not is_valid:
            raise ValueError(error_msg)
        self.shape = shape
        return self

    def to_tableau(self) -> ShiftedTableau:
        return ShiftedTableau(Shape(tuple(self.shape)), tuple(tuple(row) for row in self.rows))

    @classmethod
    def from_tableau(cls, tableau: ShiftedTableau) -> "TableauPayload":
        return cls.model_validate(tableau.to_payload())


def read_source(source: str) -> str:
    """
    读取输入文本

    Args:
        source: 文件路径，"-" 表示标准输入

    Returns:
        str: 文本内容

    Raises:
        ValidationError: 文件不存在或无法读取
    """
    if source == "-":
        return sys.stdin.read()
    try:
        return Path(source).read_text(encoding=OUTPUT_ENCODING)
    except FileNotFoundError:
        raise ValidationError(f"文件不存在: {source}")
    except OSError as e:
        raise ValidationError(f"读取文件失败: {source} ({e})")


def parse_tableau_json(text: str) -> ShiftedTableau:
    """
    解析表格 JSON

    Raises:
        ValidationError: JSON 格式错误或行与形状不一致
    """
    try:
        payload = TableauPayload.model_validate_json(text)
    except PydanticValidationError as e:
        details = "; ".join(error["msg"] for error in e.errors())
        raise ValidationError(f"表格 JSON 无效: {details}")
    return payload.to_tableau()


def load_multichain(source: str) -> Multichain:
    """从文件或标准输入读取多链（每行一条路径，自下而上）"""
    return parse_multichain(read_source(source))


def load_tableau(source: str) -> ShiftedTableau:
    """从文件或标准输入读取表格 JSON"""
    return parse_tableau_json(read_source(source))

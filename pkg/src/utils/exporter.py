"""
导出模块 - 报告模型与 JSON / 表格 / CSV 渲染
"""
from pathlib import Path
from typing import Optional, Union

import pandas as pd
from pydantic import BaseModel, Field, field_serializer

from ..config import OUTPUT_ENCODING, REPORT_FORMATS
from .validator import ValidationError

# 报告中的值：计数一律为十进制字符串
ResultValue = Union[str, bool, None, list[str]]

# 耗时保留的小数位数（JSON 与表格/CSV 相同）
ELAPSED_DIGITS = 3


def round_seconds(value: Optional[float]) -> Optional[float]:
    return None if value is None else round(value, ELAPSED_DIGITS)


class SuiteResult(BaseModel):
    """单个验证套件的结果"""
    suite: str
    instances: str
    passed: bool
    counterexample: Optional[str] = None
    coverage: Optional[str] = None
    elapsed_seconds: Optional[float] = None

    @field_serializer("elapsed_seconds")
    def _serialize_elapsed(self, value: Optional[float]) -> Optional[float]:
        return round_seconds(value)


class Report(BaseModel):
    """
    命令执行报告

    Attributes:
        command: 子命令名称
        input: 输入参数回显
        results: 结果键值对
        suites: verify 命令的套件结果
        elapsed_seconds: 耗时（--no-timing 时为空）
        status: ok / mismatch
        exit_code: 进程退出码
    """
    command: str
    input: dict[str, str] = Field(default_factory=dict)
    results: dict[str, ResultValue] = Field(default_factory=dict)
    suites: list[SuiteResult] = Field(default_factory=list)
    elapsed_seconds: Optional[float] = None
    status: str = "ok"
    exit_code: int = 0

    @field_serializer("elapsed_seconds")
    def _serialize_elapsed(self, value: Optional[float]) -> Optional[float]:
        return round_seconds(value)


def to_text(value) -> ResultValue:
    """把计算结果转为报告中的值（整数 → 十进制字符串，序列 → 字符串列表）"""
    if value is None or isinstance(value, (bool, str)):
        return value
    if isinstance(value, int):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [str(item) for item in value]
    return str(value)


def _cell(value: ResultValue) -> str:
    if value is None:
        return ""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, list):
        return " ".join(value)
    return value


def report_frame(report: Report) -> pd.DataFrame:
    """
    报告的表格形式（两列：项目、值）

    Args:
        report: 报告

    Returns:
        pd.DataFrame: 每个结果一行，套件结果按 "套件.字段" 展开
    """
    records = [{"项目": "command", "值": report.command}]
    for key, value in report.input.items():
        records.append({"项目": f"input.{key}", "值": value})
    for key, value in report.results.items():
        records.append({"项目": key, "值": _cell(value)})
    for suite in report.suites:
        records.append({"项目": f"{suite.suite}.instances", "值": suite.instances})
        records.append({"项目": f"{suite.suite}.passed", "值": _cell(suite.passed)})
        if suite.counterexample is not None:
            records.append({"项目": f"{suite.suite}.counterexample", "值": suite.counterexample})
        if suite.coverage is not None:
            records.append({"项目": f"{suite.suite}.coverage", "值": suite.coverage})
        if suite.elapsed_seconds is not None:
            records.append({"项目": f"{suite.suite}.elapsed_seconds", "值": str(round_seconds(suite.elapsed_seconds))})
    if report.elapsed_seconds is not None:
        records.append({"项目": "elapsed_seconds", "值": str(round_seconds(report.elapsed_seconds))})
    records.append({"项目": "status", "值": report.status})
    return pd.DataFrame(records, columns=["项目", "值"])


def export_to_json(report: Report) -> str:
    return report.model_dump_json(indent=2, exclude_none=True) + "\n"


def export_to_table(report: Report) -> str:
    return report_frame(report).to_string(index=False) + "\n"


def export_to_csv(report: Report) -> str:
    """
    导出报告为 CSV 格式

    Returns:
        str: CSV 字符串（含表头）
    """
    return report_frame(report).to_csv(index=False, lineterminator="\n")


def render_report(report: Report, fmt: str) -> str:
    """
    按格式渲染报告

    Raises:
        ValidationError: 未知格式
    """
    if fmt == "json":
        return export_to_json(report)
    if fmt == "table":
        return export_to_table(report)
    if fmt == "csv":
        return export_to_csv(report)
    raise ValidationError(f"未知的输出格式: {fmt}（可选: {', '.join(REPORT_FORMATS)}）")


def write_output(text: str, out: Optional[str]) -> Optional[Path]:
    """
    输出文本：指定 out 时写入文件，否则写到标准输出

    Returns:
        Optional[Path]: 写入的文件路径
    """
    if out is None:
        print(text, end="")
        return None
    target = Path(out)
    target.parent.mkdir(parents=True, exist_ok=True)
    target.write_text(text, encoding=OUTPUT_ENCODING)
    return target

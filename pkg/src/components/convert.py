"""
convert 命令 - 多链与移位表格互相转换（θ / θ⁻¹）
"""
import time
from dataclasses import dataclass
from typing import Optional

from ..utils.bijections import classify_via_theta, theta, theta_context, theta_inv
from ..utils.exporter import Report, to_text
from ..utils.importer import TableauPayload, load_multichain, load_tableau
from ..utils.lattice import Multichain, format_multichain
from ..utils.tableaux import ShiftedTableau, tableau_class
from ..utils.validator import PreconditionError, validate_positive

DIRECTIONS = ["chain-to-tableau", "tableau-to-chain"]


@dataclass
class Conversion:
    """转换结果：报告与转换后的对象文本"""
    report: Report
    payload: str


def tableau_json(tableau: ShiftedTableau) -> str:
    return TableauPayload.from_tableau(tableau).model_dump_json() + "\n"


def _describe(chain: Multichain, tableau: ShiftedTableau, k: int) -> dict:
    flags = classify_via_theta(tableau, k)
    context = theta_context(chain)
    return {
        "k": to_text(k),
        "shape": to_text(tableau.shape.parts),
        "rows": [" ".join(str(value) for value in row) for row in tableau.rows],
        "chain": chain.words(),
        "tableau.class": tableau_class(tableau).value,
        "tableau.max": to_text(tableau.max_entry),
        "chain.is_chain": flags.is_chain,
        "chain.small_intervals": flags.small_intervals,
        "chain.is_saturated": flags.is_saturated,
        "bottom_repeats": to_text(context.bottom_repeats(tableau)),
    }


def convert(direction: str, source: str, k: Optional[int] = None, timing: bool = True) -> Conversion:
    """
    执行转换

    Args:
        direction: chain-to-tableau 或 tableau-to-chain
        source: 输入文件路径，"-" 表示标准输入
        k: 多链长度（tableau-to-chain 时必需）
        timing: 是否记录耗时

    Returns:
        Conversion: 报告与输出文本（表格 JSON 或多链文本）

    Raises:
        ValidationError: 输入无法解析、方向未知、缺少 k 或 max(T) > k
    """
    started = time.perf_counter()
    if direction == "chain-to-tableau":
        chain = load_multichain(source)
        tableau = theta(chain)
        k = chain.length
        payload = tableau_json(tableau)
    elif direction == "tableau-to-chain":
        if k is None:
            raise PreconditionError("convert", "tableau-to-chain 需要 --k")
        is_valid, error_msg = validate_positive(k, "k")
        if not is_valid:
            raise PreconditionError("convert", error_msg)
        tableau = load_tableau(source)
        chain = theta_inv(tableau, k)
        payload = format_multichain(chain)
    else:
        raise PreconditionError("convert", f"未知的转换方向: {direction}（可选: {', '.join(DIRECTIONS)}）")

    report = Report(
        command="convert",
        input={"direction": direction, "source": source},
        results=_describe(chain, tableau, k),
    )
    if timing:
        report.elapsed_seconds = time.perf_counter() - started
    return Conversion(report=report, payload=payload)

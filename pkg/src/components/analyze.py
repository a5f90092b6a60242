"""
analyze 命令 - 汇总一条路径的全部统计量
"""
import time
from typing import Optional

from ..utils.exporter import Report, to_text
from ..utils.formulas import (
    f_cross_check,
    f_value,
    multichain_counts,
    saturated_count,
)
from ..utils.lattice import chain_length, degree
from ..utils.paths import bottom_path, classify, parse_path, top_path, valley_peak_profile
from ..utils.tableaux import count_weak, shape_of
from ..utils.validator import PreconditionError, sanitize_word, validate_positive


def _points(pairs) -> list[str]:
    return [f"{position}:{height}" for position, height in pairs]


def analyze_path(
    word: str,
    k: Optional[int] = None,
    mu: Optional[int] = None,
    cross_check: bool = False,
    timing: bool = True,
) -> Report:
    """
    分析路径

    Args:
        word: 路径文本
        k: 多链长度（给出时统计长度为 k 的多链）
        mu: 底端重复次数（需同时给出 k）
        cross_check: 是否用三种途径分别计算 f(P)
        timing: 是否记录耗时

    Returns:
        Report: 分析报告

    Raises:
        PathParseError: 路径含非法字符
        PreconditionError: k / μ 不合法
    """
    started = time.perf_counter()
    path = parse_path(sanitize_word(word))
    stripped = path.strip_first_ascent()
    profile = valley_peak_profile(path)
    path_class = classify(path)

    results = {
        "n": to_text(len(path)),
        "up_count": to_text(path.up_count),
        "down_count": to_text(path.down_count),
        "heights": to_text(path.heights),
        "valleys": _points(profile.valleys),
        "peaks": _points(profile.peaks),
        "is_dyck": path_class.is_dyck,
        "is_dyck_prefix": path_class.is_dyck_prefix,
        "is_dyck_suffix": path_class.is_dyck_suffix,
        "degree": to_text(degree(path)),
        "rank": to_text(chain_length(bottom_path(len(path)), path)),
        "chain_length_to_top": to_text(chain_length(path, top_path(len(path)))),
        "first_ascent": to_text(path.first_ascent_length),
    }
    if profile.lv is not None:
        results["lv"] = to_text(profile.lv)
        results["hv"] = to_text(profile.hv)
    if len(stripped) > 0:
        results["shape"] = to_text(shape_of(stripped).parts)

    results["f"] = to_text(f_value(path))
    if cross_check:
        for outcome in f_cross_check(path):
            results[f"f.{outcome.route.value}"] = to_text(outcome.value)
            if outcome.trace:
                results["f.trace"] = list(outcome.trace)

    if not path.is_top():
        results["saturated"] = to_text(saturated_count(path))

    if mu is not None and k is None:
        raise PreconditionError("analyze", "给出 --mu 时必须同时给出 --k")
    if k is not None:
        is_valid, error_msg = validate_positive(k, "k")
        if not is_valid:
            raise PreconditionError("analyze", error_msg)
        if len(stripped) > 0:
            results["multichains"] = to_text(count_weak(shape_of(stripped), k))
        else:
            results["multichains"] = "1"
        if mu is not None:
            results["multichains.mu"] = to_text(multichain_counts(path, k, mu))

    report = Report(
        command="analyze",
        input={"path": path.word},
        results=results,
    )
    if k is not None:
        report.input["k"] = str(k)
    if mu is not None:
        report.input["mu"] = str(mu)
    if cross_check:
        values = {results[f"f.{name}"] for name in ("bruteforce", "tableaux", "recursive")}
        if len(values) != 1:
            report.status = "mismatch"
            report.exit_code = 1
    if timing:
        report.elapsed_seconds = time.perf_counter() - started
    return report

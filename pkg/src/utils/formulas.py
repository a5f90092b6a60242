"""
计数公式模块 - V(a,b)、I(a)、J(P)、f(P) 的三种算法、饱和链与多链计数

f(P) 是从 P 到 u^n、只含小区间且长度最小（= δ(P)）的链的个数：
- 表格法：形状 λ(P′)、max(T) = δ(P′) 的递增移位表格个数（P′ 为去掉首个上升段后的路径）
- 递归法：按乘积分解、删除首行、素 Dyck 求和、Dyck 前缀求和四条规则逐步化简
- 穷举法：见 oracles.brute_f
"""
from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from functools import lru_cache
from itertools import product
from typing import Iterator

from ..config import get_prop3_limit

from .lattice import Multichain, count_interval, degree, interval, up_set
from .oracles import brute_f
from .paths import (
    Path,
    classify,
    decompose_prefix,
    decompose_suffix,
    highest_valley_or_zero,
    top_path,
    valley_set,
)
from .tableaux import (
    count_increasing,
    count_standard_formula,
    count_weak_exact,
    shape_of,
)
from .validator import LimitExceededError, PreconditionError


class Route(str, Enum):
    """f(P) 的计算途径"""
    BRUTEFORCE = "bruteforce"
    TABLEAUX = "tableaux"
    RECURSIVE = "recursive"


@dataclass(frozen=True)
class FResult:
    """
    f(P) 的计算结果

    Attributes:
        value: f(P)，恒 ≥ 1
        route: 计算途径
        trace: 递归法依次使用的化简规则
    """
    value: int
    route: Route
    trace: tuple[str, ...] = field(default=())


def _require_dyck(operation: str, path: Path) -> int:
    if not classify(path).is_dyck:
        raise PreconditionError(operation, f"{path.word!r} 不是 Dyck 路径")
    return len(path) // 2


def _staircase(m: int) -> Path:
    return Path("u" * m + "d" * m)


# ==================== 区间计数 ====================

def I_count(dyck: Path) -> int:
    """
    I(a) = |[a, u^m d^m]|

    Raises:
        PreconditionError: a 不是 Dyck 路径
    """
    m = _require_dyck("I_count", dyck)
    return count_interval(dyck, _staircase(m))


def J_count(path: Path) -> int:
    """J(P) = |[P, u^{|P|}]|"""
    return count_interval(path, top_path(len(path)))


# ==================== V 型多链 ====================

@lru_cache(maxsize=None)
def _typev_layers(word: str) -> tuple[tuple[str, int], ...]:
    start = Path(word)
    m = len(word) // 2
    h = highest_valley_or_zero(start)
    layer = {start: 1}
    for j in range(1, h + 1):
        bound = h - j
        following: dict[Path, int] = {}
        for sigma, count in layer.items():
            keep = valley_set(sigma, bound)
            for tau in interval(sigma, _staircase(m)):
                if valley_set(tau, bound) == keep:
                    following[tau] = following.get(tau, 0) + count
        layer = following
    return tuple(sorted((path.word, count) for path, count in layer.items()))


def typev_counts(dyck: Path) -> dict[Path, int]:
    """
    从 a 出发的 V 型多链按终点 b 分组计数

    逐层动态规划：第 j 层从区间 [σ_{j−1}, u^m d^m] 中选出在高度 ≤ h−j
    处与 σ_{j−1} 谷完全相同的路径。

    Returns:
        dict[Path, int]: b → V(a,b)，只含非零项，按 b 的字典序
    """
    _require_dyck("typev_counts", dyck)
    return {Path(word): count for word, count in _typev_layers(dyck.word)}


def enumerate_typeV(dyck: Path) -> Iterator[tuple[Path, Multichain]]:
    """
    逐个列出从 a 出发的全部 V 型多链 σ_0 = a ≤ ... ≤ σ_h

    Yields:
        tuple[Path, Multichain]: (终点 b, 多链)，按各层路径的字典序
    """
    m = _require_dyck("enumerate_typeV", dyck)
    h = highest_valley_or_zero(dyck)
    chain = [dyck]

    def extend(j: int) -> Iterator[tuple[Path, Multichain]]:
        if j > h:
            yield chain[-1], Multichain(tuple(chain))
            return
        bound = h - j
        keep = valley_set(chain[-1], bound)
        for tau in interval(chain[-1], _staircase(m)):
            if valley_set(tau, bound) == keep:
                chain.append(tau)
                yield from extend(j + 1)
                chain.pop()

    yield from extend(1)


def V_count(a: Path, b: Path) -> int:
    """
    V(a,b)：从 a 到 b 的 V 型多链个数

    Raises:
        PreconditionError: 长度不同或不是 Dyck 路径
    """
    _require_dyck("V_count", a)
    _require_dyck("V_count", b)
    if len(a) != len(b):
        raise PreconditionError("V_count", f"长度不一致: |a|={len(a)}, |b|={len(b)}")
    return typev_counts(a).get(b, 0)


# ==================== 求和公式 ====================

def prop2_rhs(dyck: Path) -> int:
    """
    Σ_{s ≥ a} V(a,s) I(s)，应等于 f(uad)

    Raises:
        PreconditionError: a 不是 Dyck 路径
    """
    return sum(count * I_count(s) for s, count in typev_counts(dyck).items())


def prop3_rhs(path: Path) -> int:
    """
    Σ Π_l V(a_l, s_l) J(s_0 V_1)，应等于 f(duP)

    对 P = a_0 u a_1 ... u a_k，外层遍历 s_l ≥ a_l，内层遍历 Dyck 前缀序列
    V_k, ..., V_1，其中 V_i ∈ [u s_i V_{i+1}, u^{...}]，V_{k+1} = ε。按定义逐项求和。

    Raises:
        PreconditionError: P 不是 Dyck 前缀
        LimitExceededError: |duP| 超过 SHIFTED_CHAINS_PROP3_LIMIT
    """
    if not classify(path).is_dyck_prefix:
        raise PreconditionError("prop3_rhs", f"{path.word!r} 不是 Dyck 前缀")
    limit = get_prop3_limit()
    if len(path) + 2 > limit:
        raise LimitExceededError(f"prop3_rhs: |duP| = {len(path) + 2} 超过上限 {limit}")
    return _prop3_value(path.word)


@lru_cache(maxsize=None)
def _prop3_value(word: str) -> int:
    components = decompose_prefix(Path(word))
    k = len(components) - 1
    choices = [list(typev_counts(component).items()) for component in components]

    total = 0
    for selection in product(*choices):
        weight = 1
        for _, count in selection:
            weight *= count
        tops = [s for s, _ in selection]

        @lru_cache(maxsize=None)
        def inner(i: int, above: str) -> int:
            # above 为 V_{i+1}；i = 0 时返回 J(s_0 V_1)
            if i == 0:
                return J_count(tops[0] + Path(above))
            low = Path("u") + tops[i] + Path(above)
            return sum(inner(i - 1, v.word) for v in up_set(low))

        total += weight * inner(k, "")
    return total


# ==================== f(P) ====================

def f_by_tableaux(path: Path) -> int:
    """
    f(P) = 形状 λ(P′)、max(T) = δ(P′) 的递增移位表格个数

    f(u^n) = f(ε) = 1。
    """
    stripped = path.strip_first_ascent()
    if len(stripped) == 0:
        return 1
    return count_increasing(shape_of(stripped), degree(stripped), exact_max=True)


def f_value(path: Path) -> int:
    """f(P)（表格法）"""
    return f_by_tableaux(path)


def _prop2_closing(prefix: Path) -> Path:
    # prefix 为 Dyck 后缀，u^c prefix 为 Dyck 路径
    return Path("u" * -prefix.final_height) + prefix


def _reduce(path: Path, trace: list[str]) -> int:
    if path.is_top():
        return 1
    for _ in range(path.first_ascent_length):
        trace.append("strip")
    path = path.strip_first_ascent()
    points = path.points
    n = len(path)

    rest = Path(path.word[1:])
    if min(points[1:]) >= -1:
        if len(rest) == 0:
            trace.append("base")
            return 1
        if classify(rest).return_points:
            trace.append("return-point")
            return _reduce(rest, trace)
        trace.append("prefix-sum")
        return prop3_rhs(Path(rest.word[1:]))

    lowest = min(points)
    last = max(index for index, height in enumerate(points) if height == lowest)
    if last < n:
        trace.append("split")
        return (
            _reduce(Path(path.word[:last]), trace)
            * _reduce(Path("d" + path.word[last:]), trace)
        )

    tail = decompose_suffix(path)[-1]
    if len(tail) > 0:
        trace.append("split")
        return (
            _reduce(Path(path.word[:n - len(tail)]), trace)
            * _reduce(Path("d") + tail, trace)
        )
    trace.append("dyck-sum")
    return prop2_rhs(_prop2_closing(Path(path.word[:-1])))


def f_recursive(path: Path) -> FResult:
    """
    按化简规则递归计算 f(P)

    规则依次为：删除首个上升段（f(uP) = f(P)）；P = dB 且 B 为 Dyck 前缀时，
    B 有返回点则 f(dB) = f(B)，否则按 Dyck 前缀求和；全局最低点最后一次出现在
    内部时拆成 Dyck 后缀与 Dyck 前缀之积；P 终止于最低点时剥离最后一个后缀分量，
    该分量为空时转为素 Dyck 求和。

    Returns:
        FResult: 值与依次使用的规则（u^n 的 trace 为空）
    """
    trace: list[str] = []
    value = _reduce(path, trace)
    return FResult(value=value, route=Route.RECURSIVE, trace=tuple(trace))


def f_cross_check(path: Path) -> list[FResult]:
    """三种途径分别计算 f(P)，顺序为 bruteforce、tableaux、recursive"""
    return [
        FResult(value=brute_f(path), route=Route.BRUTEFORCE),
        FResult(value=f_by_tableaux(path), route=Route.TABLEAUX),
        f_recursive(path),
    ]


# ==================== 饱和链与多链 ====================

def saturated_count(path: Path) -> int:
    """
    P → u^n 饱和链个数 = 形状 λ(P′) 的标准移位表格个数（乘积公式）

    Raises:
        PreconditionError: P = u^n
    """
    if path.is_top():
        raise PreconditionError("saturated_count", f"{path.word!r} 是最大元，没有饱和链")
    return count_standard_formula(shape_of(path.strip_first_ascent()))


def multichain_counts(path: Path, k: int, mu: int) -> int:
    """
    多链 P = P_0 = ... = P_{μ−1} < P_μ ≤ ... ≤ P_k = u^n 的个数

    等于形状 λ(P′)、max(T) = k − μ + 1 的移位表格个数。μ = k + 1 表示全部相等，
    只有 P = u^n 时非零。

    Raises:
        PreconditionError: 不满足 k ≥ 0 且 1 ≤ μ ≤ k + 1
    """
    if k < 0 or not (1 <= mu <= k + 1):
        raise PreconditionError("multichain_counts", f"要求 1 ≤ μ ≤ k + 1，实际 k={k}, μ={mu}")
    if path.is_top():
        return 1 if mu == k + 1 else 0
    return count_weak_exact(shape_of(path.strip_first_ascent()), k - mu + 1)

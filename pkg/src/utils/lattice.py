"""
格结构模块 - 路径格 P_n 上的序、并/交、覆盖、填充、度数、区间计数与多链分类

P ≤ Q 当且仅当对每个 i 都有 h_i(P) ≤ h_i(Q)。并与交分别取逐点最大/最小高度。
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from typing import Iterable, Iterator, Sequence

from .paths import (
    Path,
    classify,
    highest_valley_or_zero,
    parse_path,
    path_from_heights,
    top_path,
    valley_peak_profile,
    valley_set,
)
from .validator import PathParseError, PreconditionError


class Relation(str, Enum):
    """两条路径的比较结果"""
    EQUAL = "equal"
    LESS = "less"
    GREATER = "greater"
    INCOMPARABLE = "incomparable"


@dataclass(frozen=True)
class Multichain:
    """
    多链 P_0 ≤ P_1 ≤ ... ≤ P_k（等长路径）

    Attributes:
        paths: (P_0, ..., P_k)，自下而上
    """
    paths: tuple[Path, ...]

    def __post_init__(self):
        if not self.paths:
            raise PreconditionError("multichain", "多链至少包含一条路径")
        n = len(self.paths[0])
        for index, path in enumerate(self.paths):
            if len(path) != n:
                raise PreconditionError(
                    "multichain", f"第 {index} 条路径长度 {len(path)} 与 {n} 不一致"
                )
        for index in range(1, len(self.paths)):
            if not is_below(self.paths[index - 1], self.paths[index]):
                raise PreconditionError(
                    "multichain",
                    f"P_{index - 1} = {self.paths[index - 1].word} 不在 "
                    f"P_{index} = {self.paths[index].word} 之下"
                )

    @classmethod
    def from_words(cls, words: Iterable[str]) -> "Multichain":
        return cls(tuple(Path(word) for word in words))

    @property
    def base_length(self) -> int:
        return len(self.paths[0])

    @property
    def length(self) -> int:
        """多链长度 k"""
        return len(self.paths) - 1

    @property
    def bottom(self) -> Path:
        return self.paths[0]

    @property
    def top(self) -> Path:
        return self.paths[-1]

    def __iter__(self) -> Iterator[Path]:
        return iter(self.paths)

    def __getitem__(self, index: int) -> Path:
        return self.paths[index]

    def words(self) -> list[str]:
        return [path.word for path in self.paths]


@dataclass(frozen=True)
class MultichainClass:
    """多链分类标志"""
    is_chain: bool
    small_intervals: bool
    is_saturated: bool


def _require_same_length(operation: str, p: Path, q: Path) -> None:
    if len(p) != len(q):
        raise PreconditionError(operation, f"长度不一致: |P|={len(p)}, |Q|={len(q)}")


# ==================== 序与格运算 ====================

def is_below(p: Path, q: Path) -> bool:
    """P ≤ Q（逐点高度比较，长度需相同）"""
    return len(p) == len(q) and all(a <= b for a, b in zip(p.heights, q.heights))


def compare(p: Path, q: Path) -> Relation:
    """
    比较两条等长路径

    Raises:
        PreconditionError: 长度不一致
    """
    _require_same_length("compare", p, q)
    if p == q:
        return Relation.EQUAL
    if is_below(p, q):
        return Relation.LESS
    if is_below(q, p):
        return Relation.GREATER
    return Relation.INCOMPARABLE


def join_meet(p: Path, q: Path) -> tuple[Path, Path]:
    """
    并与交：逐点取最大/最小高度

    Returns:
        tuple[Path, Path]: (P ∨ Q, P ∧ Q)
    """
    _require_same_length("join_meet", p, q)
    join = path_from_heights([max(a, b) for a, b in zip(p.heights, q.heights)])
    meet = path_from_heights([min(a, b) for a, b in zip(p.heights, q.heights)])
    return join, meet


def _require_below(operation: str, p: Path, q: Path) -> None:
    _require_same_length(operation, p, q)
    if not is_below(p, q):
        raise PreconditionError(operation, f"{p.word} 不在 {q.word} 之下")


def chain_length(p: Path, q: Path) -> int:
    """
    饱和链长度 l(P,Q) = ½ Σ (h_i(Q) − h_i(P))

    Raises:
        PreconditionError: P ≤ Q 不成立
    """
    _require_below("chain_length", p, q)
    return sum(b - a for a, b in zip(p.heights, q.heights)) // 2


def chain_length_by_steps(p: Path, q: Path) -> int:
    """l(P,Q) 的另一种计算：Σ (n−i+1)([q_i = u] − [p_i = u])"""
    _require_below("chain_length_by_steps", p, q)
    n = len(p)
    return sum(
        (n - index) * ((b == "u") - (a == "u"))
        for index, (a, b) in enumerate(zip(p.word, q.word))
    )


def complement(path: Path) -> Path:
    """交换 u/d；这是格上的反序对合（自对偶性）"""
    return Path(path.word.translate(str.maketrans("ud", "du")))


# ==================== 覆盖、填充与度数 ====================

def _flip_valley(chars: list[str], position: int) -> None:
    # position 为谷点编号（1 起），对应第 position 步必为 d
    if position == len(chars):
        chars[position - 1] = "u"
    else:
        chars[position - 1] = "u"
        chars[position] = "d"


def covers(path: Path) -> list[Path]:
    """
    P 的全部覆盖元：每次把一个谷翻成峰

    Returns:
        list[Path]: 按谷的位置排序
    """
    result = []
    for position, _ in valley_peak_profile(path).valleys:
        chars = list(path.word)
        _flip_valley(chars, position)
        result.append(Path("".join(chars)))
    return result


def filling(path: Path) -> Path:
    """填充：所有谷同时翻成峰；u^n 的填充是自身"""
    chars = list(path.word)
    for position, _ in valley_peak_profile(path).valleys:
        _flip_valley(chars, position)
    return Path("".join(chars))


def filling_chain(path: Path) -> list[Path]:
    """反复填充直到 u^n：P, P~, P~~, ..., u^n"""
    chain = [path]
    while not chain[-1].is_top():
        chain.append(filling(chain[-1]))
    return chain


def degree(path: Path) -> int:
    """度数 δ(P)：迭代填充到达 u^n 的次数"""
    return len(filling_chain(path)) - 1


def degree_by_formula(path: Path) -> int:
    """δ(P) = |P| − 1 − lv(P)（P ≠ u^n），δ(u^n) = 0"""
    lv = valley_peak_profile(path).lv
    if lv is None:
        return 0
    return len(path) - 1 - lv


# ==================== 区间 ====================

def count_interval(p: Path, q: Path) -> int:
    """
    区间 [P, Q] 的元素个数

    按位置做动态规划，第 i 步的高度限制在 [h_i(P), h_i(Q)] 内。

    Raises:
        PreconditionError: P ≤ Q 不成立
    """
    _require_below("count_interval", p, q)
    ways = {0: 1}
    for low, high in zip(p.heights, q.heights):
        step: dict[int, int] = {}
        for height, count in ways.items():
            for nxt in (height - 1, height + 1):
                if low <= nxt <= high:
                    step[nxt] = step.get(nxt, 0) + count
        ways = step
    return sum(ways.values())


def interval(p: Path, q: Path) -> Iterator[Path]:
    """
    枚举区间 [P, Q] 的全部路径（字典序）

    Raises:
        PreconditionError: P ≤ Q 不成立
    """
    _require_below("interval", p, q)
    lows = p.heights
    highs = q.heights
    n = len(p)

    def extend(prefix: str, height: int) -> Iterator[str]:
        index = len(prefix)
        if index == n:
            yield prefix
            return
        if lows[index] <= height - 1 <= highs[index]:
            yield from extend(prefix + "d", height - 1)
        if lows[index] <= height + 1 <= highs[index]:
            yield from extend(prefix + "u", height + 1)

    for word in extend("", 0):
        yield Path(word)


def up_set(path: Path) -> Iterator[Path]:
    """[P, u^n] 的全部路径"""
    return interval(path, top_path(len(path)))


# ==================== 多链 ====================

def is_small_step(p: Path, q: Path) -> bool:
    """Q 是否由 P 翻转若干个谷（可以为零个）得到：P ≤ Q ≤ P~"""
    return is_below(p, q) and is_below(q, filling(p))


def classify_multichain(chain: Multichain, top_required: bool = False) -> MultichainClass:
    """
    多链分类：是否为链、是否只有小区间、是否为饱和链

    Args:
        chain: 多链
        top_required: 是否要求顶端为 u^n

    Returns:
        MultichainClass: 分类标志

    Raises:
        PreconditionError: 要求顶端为 u^n 但不满足
    """
    if top_required and not chain.top.is_top():
        raise PreconditionError("classify_multichain", f"顶端 {chain.top.word} 不是 u^n")

    steps = list(zip(chain.paths, chain.paths[1:]))
    is_chain = all(p != q for p, q in steps)
    small = all(is_small_step(p, q) for p, q in steps)
    saturated = is_chain and chain.length == chain_length(chain.bottom, chain.top)
    return MultichainClass(is_chain=is_chain, small_intervals=small, is_saturated=saturated)


def is_type_v(chain: Multichain) -> bool:
    """
    是否为 V 型多链

    σ_0 ≤ ... ≤ σ_h 均为 Dyck 路径，h = hv(σ_0)，且对每个 j ∈ [h]，
    σ_j 与 σ_{j-1} 在高度 ≤ h−j 处的谷完全相同。
    """
    if not all(classify(path).is_dyck for path in chain.paths):
        return False
    h = highest_valley_or_zero(chain.bottom)
    if chain.length != h:
        return False
    for j in range(1, h + 1):
        bound = h - j
        if valley_set(chain[j], bound) != valley_set(chain[j - 1], bound):
            return False
    return True


# ==================== 文本格式 ====================

def parse_multichain(text: str) -> Multichain:
    """
    解析多链文本：每行一条路径，自下而上；空行与 # 开头的行被忽略

    Raises:
        PathParseError: 某行含非法字符（信息中带行号）
        PreconditionError: 多链为空或顺序不合法
    """
    paths = []
    for line_number, line in enumerate(text.splitlines(), start=1):
        stripped = line.strip()
        if not stripped or stripped.startswith("#"):
            continue
        try:
            paths.append(parse_path(stripped))
        except PathParseError as e:
            raise PathParseError(f"第 {line_number} 行: {e}", e.position) from e
    return Multichain(tuple(paths))


def format_multichain(chain: Multichain | Sequence[Path]) -> str:
    """多链的文本形式（每行一条路径，自下而上，末尾换行）"""
    paths = chain.paths if isinstance(chain, Multichain) else chain
    return "".join(path.word + "\n" for path in paths)

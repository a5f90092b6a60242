"""
路径模块 - 二元路径的表示、解析、高度计算与结构分解

路径是由上步 u = (1,1) 和下步 d = (1,-1) 组成的有限序列，起点视为原点。
第 i 个点的高度记为 h_i（h_0 = 0）。本模块提供路径与高度序列、k 编码之间的
互相转换，谷/峰统计，Dyck 前缀/后缀的判定与唯一分解。
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from functools import cached_property
from itertools import product
from typing import Iterable, Iterator, Optional, Sequence

from .validator import PathParseError, PreconditionError, validate_path_text


class Step(str, Enum):
    """单步方向"""
    UP = "u"
    DOWN = "d"


@dataclass(frozen=True)
class Path:
    """
    二元路径（不可变）

    Attributes:
        word: 规范文本形式，仅含小写 u/d；空串表示空路径 ε
    """
    word: str = ""

    def __post_init__(self):
        if not isinstance(self.word, str):
            raise PathParseError("路径必须由字符串构造", 0)
        for index, char in enumerate(self.word):
            if char != "u" and char != "d":
                raise PathParseError(f"第 {index} 个字符 {char!r} 不是 u 或 d", index)

    def __len__(self) -> int:
        return len(self.word)

    def __str__(self) -> str:
        return self.word

    def __iter__(self) -> Iterator[Step]:
        return iter(self.steps)

    def __add__(self, other: "Path") -> "Path":
        return Path(self.word + other.word)

    @cached_property
    def steps(self) -> tuple[Step, ...]:
        return tuple(Step(char) for char in self.word)

    @cached_property
    def heights(self) -> tuple[int, ...]:
        """各点高度 (h_1, ..., h_n)"""
        result = []
        height = 0
        for char in self.word:
            height += 1 if char == "u" else -1
            result.append(height)
        return tuple(result)

    @cached_property
    def points(self) -> tuple[int, ...]:
        """含起点的高度序列 (h_0, h_1, ..., h_n)"""
        return (0,) + self.heights

    @property
    def up_count(self) -> int:
        return self.word.count("u")

    @property
    def down_count(self) -> int:
        return self.word.count("d")

    @property
    def final_height(self) -> int:
        return self.up_count - self.down_count

    @property
    def first_ascent_length(self) -> int:
        """开头连续上步的个数"""
        return len(self.word) - len(self.word.lstrip("u"))

    def strip_first_ascent(self) -> "Path":
        """删除开头的上升段（结果为空或以 d 开头）"""
        return Path(self.word.lstrip("u"))

    def is_top(self) -> bool:
        """是否为最大元 u^n"""
        return "d" not in self.word

    def starts_with_down(self) -> bool:
        return self.word.startswith("d")


@dataclass(frozen=True)
class HeightProfile:
    """高度序列 (h_1, ..., h_n)，h_0 = 0 隐含"""
    heights: tuple[int, ...]

    def __post_init__(self):
        previous = 0
        for index, height in enumerate(self.heights):
            if abs(height - previous) != 1:
                raise PreconditionError(
                    "path_from_heights",
                    f"第 {index + 1} 个高度 {height} 与前一高度 {previous} 相差不为 1"
                )
            previous = height

    def __len__(self) -> int:
        return len(self.heights)


@dataclass(frozen=True)
class KEncoding:
    """
    k 编码：k_i 为第 i 个下步之前的上步个数，k_{m+1} = |P|_u

    Attributes:
        m: 下步个数
        k: (k_1, ..., k_{m+1})
    """
    m: int
    k: tuple[int, ...]


@dataclass(frozen=True)
class ValleyPeakProfile:
    """谷与峰的位置和高度；无谷时 lv/hv 为 None"""
    valleys: tuple[tuple[int, int], ...]
    peaks: tuple[tuple[int, int], ...]
    lv: Optional[int]
    hv: Optional[int]


@dataclass(frozen=True)
class PathClass:
    """Dyck 类型判定结果"""
    is_dyck: bool
    is_dyck_prefix: bool
    is_dyck_suffix: bool
    return_points: tuple[int, ...]


# ==================== 解析与格式化 ====================

def parse_path(text: str) -> Path:
    """
    将 u/d 文本解析为路径（大小写均可）

    Args:
        text: 路径文本

    Returns:
        Path: 解析后的路径

    Raises:
        PathParseError: 出现 u/d 以外的字符，position 为第一个非法字符下标
    """
    is_valid, error_msg = validate_path_text(text)
    if not is_valid:
        if not isinstance(text, str):
            raise PathParseError(error_msg, 0)
        position = next(index for index, char in enumerate(text) if char not in "uUdD")
        raise PathParseError(error_msg, position)
    return Path(text.lower())


def format_path(path: Path) -> str:
    """路径的规范文本形式（parse_path 的逆）"""
    return path.word


# ==================== 高度与 k 编码 ====================

def heights(path: Path) -> HeightProfile:
    """
    计算路径的高度序列

    Args:
        path: 路径

    Returns:
        HeightProfile: (h_1, ..., h_n)
    """
    return HeightProfile(path.heights)


def path_from_heights(profile: HeightProfile | Sequence[int]) -> Path:
    """
    由高度序列重建路径

    Raises:
        PreconditionError: 相邻高度差不为 ±1
    """
    if not isinstance(profile, HeightProfile):
        profile = HeightProfile(tuple(profile))

    chars = []
    previous = 0
    for height in profile.heights:
        chars.append("u" if height > previous else "d")
        previous = height
    return Path("".join(chars))


def k_encoding(path: Path) -> KEncoding:
    """
    计算路径的 k 编码

    Args:
        path: 路径

    Returns:
        KEncoding: m 与 (k_1, ..., k_{m+1})
    """
    ks = []
    ups = 0
    for char in path.word:
        if char == "u":
            ups += 1
        else:
            ks.append(ups)
    ks.append(ups)
    return KEncoding(m=len(ks) - 1, k=tuple(ks))


def from_k_encoding(encoding: KEncoding | Sequence[int]) -> Path:
    """
    由 k 编码重建路径

    Args:
        encoding: KEncoding 或 (k_1, ..., k_{m+1}) 序列

    Returns:
        Path: 对应路径

    Raises:
        PreconditionError: 序列为空、含负数或不单调
    """
    ks = tuple(encoding.k) if isinstance(encoding, KEncoding) else tuple(encoding)
    if not ks:
        raise PreconditionError("from_k_encoding", "k 序列不能为空")
    if ks[0] < 0:
        raise PreconditionError("from_k_encoding", "k_1 不能为负")
    for left, right in zip(ks, ks[1:]):
        if right < left:
            raise PreconditionError("from_k_encoding", f"k 序列不单调: {ks}")

    parts = ["u" * ks[0]]
    for left, right in zip(ks, ks[1:]):
        parts.append("d")
        parts.append("u" * (right - left))
    return Path("".join(parts))


# ==================== 谷与峰 ====================

def valley_peak_profile(path: Path) -> ValleyPeakProfile:
    """
    统计谷与峰

    谷是极大下降段的最后一点（du 中的 d 之后，或路径末尾的 d 之后），
    峰与之对称。位置按点的编号 1..n 计。

    Args:
        path: 路径

    Returns:
        ValleyPeakProfile: 谷、峰列表以及最低/最高谷高度
    """
    word = path.word
    hs = path.heights
    n = len(word)
    valleys = []
    peaks = []
    for index, char in enumerate(word):
        last = index == n - 1
        if char == "d" and (last or word[index + 1] == "u"):
            valleys.append((index + 1, hs[index]))
        elif char == "u" and (last or word[index + 1] == "d"):
            peaks.append((index + 1, hs[index]))

    valley_heights = [height for _, height in valleys]
    return ValleyPeakProfile(
        valleys=tuple(valleys),
        peaks=tuple(peaks),
        lv=min(valley_heights) if valley_heights else None,
        hv=max(valley_heights) if valley_heights else None,
    )


def valley_set(path: Path, max_height: int) -> frozenset[tuple[int, int]]:
    """高度不超过 max_height 的谷集合 {(位置, 高度)}"""
    return frozenset(
        (position, height)
        for position, height in valley_peak_profile(path).valleys
        if height <= max_height
    )


def highest_valley_or_zero(path: Path) -> int:
    """hv(P)，无谷时按约定取 0（ε 与 Dyck 分量的退化情形）"""
    hv = valley_peak_profile(path).hv
    return 0 if hv is None else hv


# ==================== Dyck 分类与分解 ====================

def classify(path: Path) -> PathClass:
    """
    判定 Dyck 路径 / 前缀 / 后缀

    前缀：所有高度 ≥ 0；后缀：最小高度（含起点）等于终点高度。

    Args:
        path: 路径

    Returns:
        PathClass: 各标志与返回点位置
    """
    points = path.points
    is_prefix = min(points) >= 0
    is_suffix = min(points) == points[-1]
    returns = tuple(
        index for index in range(1, len(points)) if points[index] == 0
    ) if is_prefix else ()
    return PathClass(
        is_dyck=is_prefix and points[-1] == 0,
        is_dyck_prefix=is_prefix,
        is_dyck_suffix=is_suffix,
        return_points=returns,
    )


def is_dyck(path: Path) -> bool:
    return classify(path).is_dyck


def decompose_prime(path: Path) -> list[Path]:
    """
    Dyck 路径的素分解 a = u a_1 d u a_2 d ... u a_k d

    Returns:
        list[Path]: (a_1, ..., a_k)

    Raises:
        PreconditionError: 输入不是 Dyck 路径
    """
    path_class = classify(path)
    if not path_class.is_dyck:
        raise PreconditionError("decompose_prime", f"{path.word!r} 不是 Dyck 路径")

    components = []
    start = 0
    for end in path_class.return_points:
        components.append(Path(path.word[start + 1:end - 1]))
        start = end
    return components


def compose_prime(components: Iterable[Path]) -> Path:
    """decompose_prime 的逆"""
    return Path("".join("u" + component.word + "d" for component in components))


def decompose_prefix(path: Path) -> list[Path]:
    """
    Dyck 前缀的唯一分解 P = a_0 u a_1 ... u a_k（k 为终点高度）

    在每个高度 l 的最后一次到达处切开，其后一步必为上步。

    Returns:
        list[Path]: (a_0, ..., a_k)

    Raises:
        PreconditionError: 输入不是 Dyck 前缀
    """
    if not classify(path).is_dyck_prefix:
        raise PreconditionError("decompose_prefix", f"{path.word!r} 不是 Dyck 前缀")

    points = path.points
    last_visit: dict[int, int] = {}
    for index, height in enumerate(points):
        last_visit[height] = index

    components = []
    start = 0
    for level in range(points[-1]):
        end = last_visit[level]
        components.append(Path(path.word[start:end]))
        start = end + 1
    components.append(Path(path.word[start:]))
    return components


def compose_prefix(components: Sequence[Path]) -> Path:
    """decompose_prefix 的逆"""
    return Path("u".join(component.word for component in components))


def decompose_suffix(path: Path) -> list[Path]:
    """
    Dyck 后缀的唯一分解 P = a_0 d a_1 ... d a_k（k 为起点与终点的高度差）

    在第一次到达每个新低点的下步处切开。

    Returns:
        list[Path]: (a_0, ..., a_k)

    Raises:
        PreconditionError: 输入不是 Dyck 后缀
    """
    if not classify(path).is_dyck_suffix:
        raise PreconditionError("decompose_suffix", f"{path.word!r} 不是 Dyck 后缀")

    points = path.points
    first_visit: dict[int, int] = {}
    for index, height in enumerate(points):
        first_visit.setdefault(height, index)

    components = []
    start = 0
    for level in range(1, -points[-1] + 1):
        end = first_visit[-level]
        components.append(Path(path.word[start:end - 1]))
        start = end
    components.append(Path(path.word[start:]))
    return components


def compose_suffix(components: Sequence[Path]) -> Path:
    """decompose_suffix 的逆"""
    return Path("d".join(component.word for component in components))


# ==================== 生成器 ====================

def bottom_path(n: int) -> Path:
    """最小元 d^n"""
    return Path("d" * n)


def top_path(n: int) -> Path:
    """最大元 u^n"""
    return Path("u" * n)


def all_paths(n: int) -> Iterator[Path]:
    """长度为 n 的全部路径，按字典序（d < u）"""
    for letters in product("du", repeat=n):
        yield Path("".join(letters))


def paths_starting_with_down(n: int) -> Iterator[Path]:
    """长度为 n 且以 d 开头的全部路径"""
    if n < 1:
        return
    for rest in all_paths(n - 1):
        yield Path("d" + rest.word)


def dyck_prefixes(n: int) -> Iterator[Path]:
    """长度为 n 的全部 Dyck 前缀，按字典序"""
    def extend(word: str, height: int) -> Iterator[str]:
        if len(word) == n:
            yield word
            return
        if height > 0:
            yield from extend(word + "d", height - 1)
        yield from extend(word + "u", height + 1)

    for word in extend("", 0):
        yield Path(word)


def dyck_paths(m: int) -> Iterator[Path]:
    """半长为 m 的全部 Dyck 路径，按字典序"""
    def extend(word: str, height: int, ups: int) -> Iterator[str]:
        if len(word) == 2 * m:
            yield word
            return
        if height > 0:
            yield from extend(word + "d", height - 1, ups)
        if ups < m:
            yield from extend(word + "u", height + 1, ups + 1)

    for word in extend("", 0, 0):
        yield Path(word)

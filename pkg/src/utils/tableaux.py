"""
移位表格模块 - 严格分拆、移位图、移位表格的判定与计数

形状 λ = (λ_1 > ... > λ_m > 0) 的移位图由格子 (i,j)（i ∈ [m]，i ≤ j ≤ λ_i + i − 1）
组成，第 i 行向右缩进 i − 1 格。以 d 开头的路径 P 与其形状 λ(P) 一一对应：
λ_i = n − i − k_i + 1。
"""
from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from functools import lru_cache
from math import factorial
from typing import Callable, Iterator, Optional, Sequence

from .paths import Path, from_k_encoding, k_encoding, valley_peak_profile
from .validator import ConsistencyError, PreconditionError


@dataclass(frozen=True)
class Shape:
    """
    严格分拆

    Attributes:
        parts: (λ_1, ..., λ_m)，严格递减的正整数
    """
    parts: tuple[int, ...] = ()

    def __post_init__(self):
        for index, part in enumerate(self.parts):
            if not isinstance(part, int) or part <= 0:
                raise PreconditionError("shape", f"第 {index + 1} 项 {part!r} 不是正整数")
            if index > 0 and part >= self.parts[index - 1]:
                raise PreconditionError("shape", f"{self.parts} 不是严格分拆")

    def __len__(self) -> int:
        return len(self.parts)

    @property
    def size(self) -> int:
        """格子总数 N"""
        return sum(self.parts)

    def row_end(self, i: int) -> int:
        """第 i 行最后一格的列号 λ_i + i − 1"""
        return self.parts[i - 1] + i - 1

    def contains(self, i: int, j: int) -> bool:
        return 1 <= i <= len(self.parts) and i <= j <= self.row_end(i)

    def cells(self) -> Iterator[tuple[int, int]]:
        """按行优先顺序给出全部格子"""
        for i in range(1, len(self.parts) + 1):
            for j in range(i, self.row_end(i) + 1):
                yield i, j


class TableauClass(str, Enum):
    """表格类别"""
    WEAK = "weak"
    INCREASING = "increasing"
    STANDARD = "standard"
    INVALID = "invalid"


@dataclass(frozen=True)
class ShiftedTableau:
    """
    移位表格（元素是否单调由 tableau_class 判定）

    Attributes:
        shape: 形状
        rows: 各行元素，第 i 行的第一个元素位于格子 (i,i)
    """
    shape: Shape
    rows: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        if len(self.rows) != len(self.shape):
            raise PreconditionError(
                "tableau", f"行数 {len(self.rows)} 与形状长度 {len(self.shape)} 不一致"
            )
        for index, (row, part) in enumerate(zip(self.rows, self.shape.parts)):
            if len(row) != part:
                raise PreconditionError(
                    "tableau", f"第 {index + 1} 行应有 {part} 个元素，实际 {len(row)} 个"
                )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "ShiftedTableau":
        """由行列表构造，形状取各行长度"""
        rows = tuple(tuple(row) for row in rows)
        return cls(Shape(tuple(len(row) for row in rows)), rows)

    def entry(self, i: int, j: int) -> int:
        """格子 (i,j) 中的元素（1 起编号）"""
        return self.rows[i - 1][j - i]

    @property
    def max_entry(self) -> int:
        """max(T)，空表格为 0"""
        return max((row[-1] for row in self.rows), default=0)

    def entries(self) -> Iterator[tuple[tuple[int, int], int]]:
        for i, row in enumerate(self.rows, start=1):
            for offset, value in enumerate(row):
                yield (i, i + offset), value

    def to_payload(self) -> dict:
        """JSON 形式 {"shape": [...], "rows": [[...], ...]}"""
        return {
            "shape": list(self.shape.parts),
            "rows": [list(row) for row in self.rows],
        }


# ==================== 路径与形状 ====================

def shape_of(path: Path) -> Shape:
    """
    以 d 开头的路径对应的形状 λ(P)

    Args:
        path: 以 d 开头的路径

    Returns:
        Shape: λ_i = n − i − k_i + 1

    Raises:
        PreconditionError: 路径为空或以 u 开头
    """
    if not path.starts_with_down():
        raise PreconditionError("shape_of", f"路径 {path.word!r} 必须以 d 开头")
    return Shape(_parts_of(path))


def _parts_of(path: Path) -> tuple[int, ...]:
    n = len(path)
    encoding = k_encoding(path)
    return tuple(n - i - encoding.k[i - 1] + 1 for i in range(1, encoding.m + 1))


def path_of_shape(shape: Shape) -> Path:
    """
    shape_of 的逆：由严格分拆恢复以 d 开头的路径

    Raises:
        PreconditionError: 空形状
    """
    if not shape.parts:
        raise PreconditionError("path_of_shape", "空形状不对应以 d 开头的路径")
    n = shape.parts[0]
    m = len(shape)
    ks = [n - i - shape.parts[i - 1] + 1 for i in range(1, m + 1)]
    ks.append(n - m)
    return from_k_encoding(ks)


def diagram_cells(path: Path) -> frozenset[tuple[int, int]]:
    """任意路径的移位图 F(P) 的格子集合"""
    cells = set()
    for i, part in enumerate(_parts_of(path), start=1):
        for j in range(i, part + i):
            cells.add((i, j))
    return frozenset(cells)


def is_subdiagram(inner: Shape, outer: Shape) -> bool:
    """inner 的移位图是否包含于 outer 的移位图"""
    if len(inner) > len(outer):
        return False
    return all(a <= b for a, b in zip(inner.parts, outer.parts))


def cell_point(n: int, i: int, j: int) -> tuple[int, int]:
    """
    格子 (i,j) 对应的格点 (n+i−j, n−i−j)

    Raises:
        PreconditionError: 不满足 1 ≤ i ≤ j ≤ n
    """
    if not (1 <= i <= j <= n):
        raise PreconditionError("cell_point", f"格子 ({i},{j}) 不在 λ_1 = {n} 的移位图内")
    return n + i - j, n - i - j


def point_cell(n: int, x: int, y: int) -> tuple[int, int]:
    """
    cell_point 的逆

    Raises:
        PreconditionError: 坐标奇偶不同或不对应任何格子
    """
    if (x + y) % 2 != 0:
        raise PreconditionError("point_cell", f"格点 ({x},{y}) 的坐标奇偶不同")
    i = (x - y) // 2
    j = n - (x + y) // 2
    if not (1 <= i <= j <= n):
        raise PreconditionError("point_cell", f"格点 ({x},{y}) 不对应任何格子")
    return i, j


def low_valley_cells(path: Path) -> list[tuple[int, int]]:
    """以 d 开头的路径中，最低谷对应的格子（恰为 i + j − 1 = δ(P) 的格子）"""
    shape = shape_of(path)
    n = len(path)
    profile = valley_peak_profile(path)
    cells = []
    for position, height in profile.valleys:
        if height == profile.lv:
            cell = point_cell(n, position, height)
            if shape.contains(*cell):
                cells.append(cell)
    return sorted(cells)


# ==================== 判定 ====================

def tableau_class(tableau: ShiftedTableau) -> TableauClass:
    """
    判定表格类别：invalid / weak / increasing / standard

    Args:
        tableau: 移位表格

    Returns:
        TableauClass: 类别（非法不是异常，而是结果）
    """
    strict = True
    for (i, j), value in tableau.entries():
        if value < 1:
            return TableauClass.INVALID
        neighbours = []
        if j > i:
            neighbours.append(tableau.entry(i, j - 1))
        if i > 1:
            neighbours.append(tableau.entry(i - 1, j))
        for previous in neighbours:
            if previous > value:
                return TableauClass.INVALID
            if previous == value:
                strict = False

    values = sorted(value for _, value in tableau.entries())
    if values == list(range(1, len(values) + 1)):
        return TableauClass.STANDARD
    return TableauClass.INCREASING if strict else TableauClass.WEAK


def is_increasing(tableau: ShiftedTableau) -> bool:
    """严格递增（标准表格也算）"""
    return tableau_class(tableau) in (TableauClass.INCREASING, TableauClass.STANDARD)


def increasing_lower_bound(shape: Shape) -> int:
    """递增表格 max(T) 的下界 max_i(λ_i + 2i − 2)"""
    return max((part + 2 * i - 2 for i, part in enumerate(shape.parts, start=1)), default=0)


# ==================== 逐行回溯 ====================

def _distance_to_corner(shape: Shape) -> dict[tuple[int, int], int]:
    # 从 (i,j) 向右/向下能走的最长步数
    distance: dict[tuple[int, int], int] = {}
    for i, j in reversed(list(shape.cells())):
        best = -1
        if shape.contains(i, j + 1):
            best = max(best, distance[(i, j + 1)])
        if shape.contains(i + 1, j):
            best = max(best, distance[(i + 1, j)])
        distance[(i, j)] = best + 1
    return distance


def _row_filler(shape: Shape, max_value: int, strict: bool) -> Callable[[int, Optional[tuple[int, ...]]], Iterator[tuple[int, ...]]]:
    """返回 fill(i, above)：在上一行 above 固定时枚举第 i 行的所有合法填法"""
    distance = _distance_to_corner(shape) if strict else {}

    def fill(i: int, above: Optional[tuple[int, ...]]) -> Iterator[tuple[int, ...]]:
        end = shape.row_end(i)
        row: list[int] = []

        def extend(j: int, previous: int) -> Iterator[tuple[int, ...]]:
            if j > end:
                yield tuple(row)
                return
            low = previous + 1 if strict else max(previous, 1)
            if above is not None:
                upper_value = above[j - i + 1]
                low = max(low, upper_value + 1 if strict else upper_value)
            if strict:
                low = max(low, i + j - 1)
                high = max_value - distance[(i, j)]
            else:
                high = max_value
            for value in range(low, high + 1):
                row.append(value)
                yield from extend(j + 1, value)
                row.pop()

        yield from extend(i, 0)

    return fill


def _count(shape: Shape, max_value: int, strict: bool, exact_max: bool) -> int:
    m = len(shape)
    if m == 0:
        return 1 if (not exact_max or max_value == 0) else 0
    fill = _row_filler(shape, max_value, strict)

    @lru_cache(maxsize=None)
    def count_from(i: int, above: Optional[tuple[int, ...]], hit: bool) -> int:
        if i > m:
            return 1 if (hit or not exact_max) else 0
        return sum(
            count_from(i + 1, row, hit or row[-1] == max_value)
            for row in fill(i, above)
        )

    return count_from(1, None, False)


def _enumerate(shape: Shape, max_value: int, strict: bool, exact_max: bool) -> Iterator[ShiftedTableau]:
    m = len(shape)
    if m == 0:
        if not exact_max or max_value == 0:
            yield ShiftedTableau(shape, ())
        return
    fill = _row_filler(shape, max_value, strict)
    rows: list[tuple[int, ...]] = []

    def extend(i: int, above: Optional[tuple[int, ...]], hit: bool) -> Iterator[ShiftedTableau]:
        if i > m:
            if hit or not exact_max:
                yield ShiftedTableau(shape, tuple(rows))
            return
        for row in fill(i, above):
            rows.append(row)
            yield from extend(i + 1, row, hit or row[-1] == max_value)
            rows.pop()

    yield from extend(1, None, False)


def _require_nonnegative(operation: str, max_value: int) -> None:
    if max_value < 0:
        raise PreconditionError(operation, f"最大值 {max_value} 不能为负")


def count_increasing(shape: Shape, max_value: int, exact_max: bool = False) -> int:
    """
    递增移位表格计数

    Args:
        shape: 形状
        max_value: 元素上界 M
        exact_max: 为 True 时要求 max(T) = M

    Returns:
        int: 满足条件的表格个数
    """
    _require_nonnegative("count_increasing", max_value)
    return _count(shape, max_value, strict=True, exact_max=exact_max)


def enumerate_increasing(shape: Shape, max_value: int, exact_max: bool = False) -> Iterator[ShiftedTableau]:
    """按固定顺序枚举递增移位表格（与 count_increasing 对应）"""
    _require_nonnegative("enumerate_increasing", max_value)
    return _enumerate(shape, max_value, strict=True, exact_max=exact_max)


def count_weak(shape: Shape, max_value: int) -> int:
    """
    元素取自 [max_value] 的（弱）移位表格计数

    max_value = 0 时只有空形状计 1。
    """
    _require_nonnegative("count_weak", max_value)
    return _count(shape, max_value, strict=False, exact_max=False)


def count_weak_exact(shape: Shape, max_value: int) -> int:
    """max(T) 恰为 max_value 的弱移位表格计数：count(≤M) − count(≤M−1)"""
    _require_nonnegative("count_weak_exact", max_value)
    if max_value == 0:
        return 1 if len(shape) == 0 else 0
    return count_weak(shape, max_value) - count_weak(shape, max_value - 1)


def enumerate_weak(shape: Shape, max_value: int) -> Iterator[ShiftedTableau]:
    """按固定顺序枚举元素取自 [max_value] 的弱移位表格"""
    _require_nonnegative("enumerate_weak", max_value)
    return _enumerate(shape, max_value, strict=False, exact_max=False)


def count_standard_formula(shape: Shape) -> int:
    """
    标准移位表格个数的乘积公式

    N! / (λ_1! ... λ_m!) · Π_{i<j} (λ_i − λ_j) / (λ_i + λ_j)，精确有理数计算。

    Raises:
        ConsistencyError: 结果不是整数
    """
    parts = shape.parts
    value = Fraction(factorial(shape.size))
    for part in parts:
        value /= factorial(part)
    for a in range(len(parts)):
        for b in range(a + 1, len(parts)):
            value *= Fraction(parts[a] - parts[b], parts[a] + parts[b])
    if value.denominator != 1:
        raise ConsistencyError(f"形状 {parts} 的乘积公式结果 {value} 不是整数")
    return value.numerator

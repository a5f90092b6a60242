"""
穷举参照模块 - 直接按定义实现的慢速枚举，仅用于验证

这里的函数只复用 Path / Multichain / Shape / ShiftedTableau 等数据类型，
高度、谷、序关系等都在本模块内重新计算，不调用快速算法。
所有列表去重并按序列化形式的字典序排列。
"""
from __future__ import annotations

from functools import lru_cache
from itertools import combinations, product

from .lattice import Multichain
from .paths import Path
from .tableaux import Shape, ShiftedTableau, TableauClass
from .validator import PreconditionError


def _heights(word: str) -> list[int]:
    result, height = [], 0
    for char in word:
        height += 1 if char == "u" else -1
        result.append(height)
    return result


def _below(p: str, q: str) -> bool:
    return len(p) == len(q) and all(a <= b for a, b in zip(_heights(p), _heights(q)))


def _words(n: int) -> list[str]:
    return ["".join(letters) for letters in product("du", repeat=n)]


def _is_dyck(word: str) -> bool:
    hs = _heights(word)
    return all(h >= 0 for h in hs) and (not hs or hs[-1] == 0)


def _valleys(word: str) -> list[tuple[int, int]]:
    # (位置, 高度)，位置按点的编号 1..n
    hs = _heights(word)
    return [
        (index + 1, hs[index])
        for index, char in enumerate(word)
        if char == "d" and (index == len(word) - 1 or word[index + 1] == "u")
    ]


def _flip(word: str, positions: tuple[int, ...]) -> str:
    chars = list(word)
    for position in positions:
        chars[position - 1] = "u"
        if position < len(chars):
            chars[position] = "d"
    return "".join(chars)


def _successors(word: str) -> list[str]:
    # 翻转非空谷集得到的全部路径
    positions = [position for position, _ in _valleys(word)]
    result = set()
    for size in range(1, len(positions) + 1):
        for chosen in combinations(positions, size):
            result.add(_flip(word, chosen))
    return sorted(result)


def flips_valleys(p: Path, q: Path) -> bool:
    """Q 是否由 P 翻转某个（可以为空的）谷集合得到"""
    if len(p) != len(q):
        return False
    positions = [position for position, _ in _valleys(p.word)]
    for size in range(len(positions) + 1):
        for chosen in combinations(positions, size):
            if _flip(p.word, chosen) == q.word:
                return True
    return False


# ==================== 区间 ====================

def enumerate_interval(p: Path, q: Path) -> list[Path]:
    """
    区间 [P, Q] 的全部路径（逐个检查所有等长路径）

    Raises:
        PreconditionError: P ≤ Q 不成立
    """
    if not _below(p.word, q.word):
        raise PreconditionError("enumerate_interval", f"{p.word} 不在 {q.word} 之下")
    return [
        Path(word) for word in _words(len(p))
        if _below(p.word, word) and _below(word, q.word)
    ]


def brute_count_interval(p: Path, q: Path) -> int:
    return len(enumerate_interval(p, q))


# ==================== 链 ====================

def enumerate_min_chains(path: Path) -> list[Multichain]:
    """
    P → u^n 的全部最短小区间链（每一步翻转一个非空谷集）

    先求每条路径到 u^n 的最短步数，再沿步数逐一减少的边展开。
    """
    top = "u" * len(path)

    @lru_cache(maxsize=None)
    def distance(word: str) -> int:
        if word == top:
            return 0
        return 1 + min(distance(nxt) for nxt in _successors(word))

    chains: list[list[str]] = []

    def extend(chain: list[str]) -> None:
        word = chain[-1]
        if word == top:
            chains.append(list(chain))
            return
        for nxt in _successors(word):
            if distance(nxt) == distance(word) - 1:
                chain.append(nxt)
                extend(chain)
                chain.pop()

    extend([path.word])
    return [Multichain.from_words(words) for words in sorted(chains)]


def brute_f(path: Path) -> int:
    """f(P) 的穷举值"""
    return len(enumerate_min_chains(path))


def brute_saturated_count(path: Path) -> int:
    """沿覆盖关系（一次翻转一个谷）计数 P → u^n 的极大链"""
    top = "u" * len(path)

    @lru_cache(maxsize=None)
    def count(word: str) -> int:
        if word == top:
            return 1
        return sum(count(_flip(word, (position,))) for position, _ in _valleys(word))

    return count(path.word)


def enumerate_multichains(path: Path, k: int) -> list[Multichain]:
    """
    全部长度为 k 的多链 P = P_0 ≤ ... ≤ P_k = u^n

    Raises:
        PreconditionError: k < 0
    """
    if k < 0:
        raise PreconditionError("enumerate_multichains", f"k = {k} 不能为负")
    n = len(path)
    top = "u" * n
    words = _words(n)
    chains: list[list[str]] = []

    def extend(chain: list[str]) -> None:
        if len(chain) == k:
            if _below(chain[-1], top):
                chains.append(chain + [top])
            return
        for word in words:
            if _below(chain[-1], word):
                extend(chain + [word])

    if k == 0:
        if path.word == top:
            chains.append([top])
    else:
        extend([path.word])
    return [Multichain.from_words(chain) for chain in sorted(chains)]


# ==================== V 型多链 ====================

def enumerate_typeV_brute(dyck: Path) -> list[tuple[Path, Multichain]]:
    """
    从 a 出发的全部 V 型多链，按定义逐条检查

    Returns:
        list[tuple[Path, Multichain]]: (终点 b, 多链)，按 (b, 各路径) 排序

    Raises:
        PreconditionError: a 不是 Dyck 路径
    """
    if not _is_dyck(dyck.word):
        raise PreconditionError("enumerate_typeV_brute", f"{dyck.word!r} 不是 Dyck 路径")
    valley_heights = [height for _, height in _valleys(dyck.word)]
    h = max(valley_heights) if valley_heights else 0
    dycks = [word for word in _words(len(dyck)) if _is_dyck(word)]

    def low_valleys(word: str, bound: int) -> set[tuple[int, int]]:
        return {valley for valley in _valleys(word) if valley[1] <= bound}

    found: list[list[str]] = []

    def extend(chain: list[str]) -> None:
        j = len(chain)
        if j > h:
            found.append(list(chain))
            return
        for word in dycks:
            if _below(chain[-1], word) and low_valleys(word, h - j) == low_valleys(chain[-1], h - j):
                chain.append(word)
                extend(chain)
                chain.pop()

    extend([dyck.word])
    found.sort(key=lambda chain: (chain[-1], chain))
    return [(Path(chain[-1]), Multichain.from_words(chain)) for chain in found]


def brute_v(a: Path, b: Path) -> int:
    """V(a,b) 的穷举值"""
    return sum(1 for end, _ in enumerate_typeV_brute(a) if end == b)


# ==================== 表格 ====================

def enumerate_tableaux(
    shape: Shape,
    max_value: int,
    kind: TableauClass,
    exact_max: bool = False,
) -> list[ShiftedTableau]:
    """
    逐格回溯枚举移位表格

    Args:
        shape: 形状
        max_value: 元素上界（标准表格忽略此参数，取格子总数）
        kind: weak / increasing / standard
        exact_max: 为 True 时要求 max(T) = max_value

    Raises:
        PreconditionError: kind 为 invalid
    """
    if kind == TableauClass.INVALID:
        raise PreconditionError("enumerate_tableaux", "不能枚举非法表格")
    if kind == TableauClass.STANDARD:
        max_value = shape.size
    cells = [
        (i, j)
        for i in range(1, len(shape.parts) + 1)
        for j in range(i, shape.parts[i - 1] + i)
    ]
    strict = kind != TableauClass.WEAK
    filled: dict[tuple[int, int], int] = {}
    used: set[int] = set()
    found: list[tuple[tuple[int, ...], ...]] = []

    def extend(index: int) -> None:
        if index == len(cells):
            values = filled.values()
            if exact_max and max(values, default=0) != max_value:
                return
            found.append(tuple(
                tuple(filled[(i, j)] for j in range(i, shape.parts[i - 1] + i))
                for i in range(1, len(shape.parts) + 1)
            ))
            return
        i, j = cells[index]
        low = 1
        for neighbour in ((i, j - 1), (i - 1, j)):
            if neighbour in filled:
                low = max(low, filled[neighbour] + (1 if strict else 0))
        for value in range(low, max_value + 1):
            if kind == TableauClass.STANDARD and value in used:
                continue
            filled[(i, j)] = value
            if kind == TableauClass.STANDARD:
                used.add(value)
            extend(index + 1)
            used.discard(value)
            del filled[(i, j)]

    extend(0)
    return [ShiftedTableau(shape, rows) for rows in sorted(found)]

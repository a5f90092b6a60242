"""
双射模块 - 多链与移位表格之间的 θ 映射，以及表格分解得到的四个双射

- theta / theta_inv: P → u^n 的长度为 k 的多链 ↔ 形状 λ(P)、max(T) ≤ k 的移位表格
- split_product / merge_product: λ(P_1 P_2) 的递增表格 ↔ (λ(P_1), λ(d P_2)) 的表格对
- strip_first_row / unstrip_first_row: λ(dP) 的递增表格 ↔ λ(Q) 的递增表格
- prime_map / prime_map_inverse: λ(Pd) 的递增表格 T ↔ 带上下界的表格 V
- prefix_map / prefix_map_inverse: λ(duP) 的递增表格 ↔ 多链 (W_r)

所有函数都会先检查前置条件，不满足时抛出 PreconditionError；
结果不满足应有性质时抛出 ConsistencyError。
"""
from __future__ import annotations

from bisect import bisect_right
from dataclasses import dataclass
from typing import Optional, Sequence

from .lattice import (
    Multichain,
    MultichainClass,
    classify_multichain,
    filling_chain,
    is_type_v,
)
from .paths import (
    Path,
    classify,
    compose_prefix,
    decompose_prefix,
    highest_valley_or_zero,
    path_from_heights,
    top_path,
)
from .tableaux import (
    Shape,
    ShiftedTableau,
    TableauClass,
    is_increasing,
    path_of_shape,
    shape_of,
    tableau_class,
)
from .validator import ConsistencyError, PreconditionError


@dataclass(frozen=True)
class ThetaContext:
    """θ 映射的上下文：底路径、链长与形状"""
    base: Path
    k: int
    shape: Shape

    def bottom_repeats(self, tableau: ShiftedTableau) -> int:
        """链中等于底路径的成员个数 k − max(T) + 1"""
        return self.k - tableau.max_entry + 1


# ==================== θ ====================

def theta_context(chain: Multichain) -> ThetaContext:
    """
    检查多链可用于 θ 并返回上下文

    Raises:
        PreconditionError: 顶端不是 u^n 或底端不以 d 开头
    """
    if not chain.top.is_top():
        raise PreconditionError("theta", f"顶端 {chain.top.word} 不是 u^n")
    if not chain.bottom.starts_with_down():
        raise PreconditionError("theta", f"底端 {chain.bottom.word!r} 必须以 d 开头")
    return ThetaContext(base=chain.bottom, k=chain.length, shape=shape_of(chain.bottom))


def theta(chain: Multichain) -> ShiftedTableau:
    """
    多链 → 移位表格

    对每个格子 (i,j)，取唯一的 ξ 使 h_x(P_ξ) ≤ y < h_x(P_{ξ+1})，
    其中 (x,y) = (n+i−j, n−i−j)，令 t_ij = k − ξ。

    Args:
        chain: P_0 以 d 开头、P_k = u^n 的多链

    Returns:
        ShiftedTableau: 形状 λ(P_0)，max(T) ≤ k
    """
    context = theta_context(chain)
    n = chain.base_length
    k = context.k
    # columns[x-1][ξ] = h_x(P_ξ)，关于 ξ 单调不减
    columns = [
        [path.heights[x - 1] for path in chain.paths]
        for x in range(1, n + 1)
    ]
    rows = []
    for i in range(1, len(context.shape) + 1):
        row = []
        for j in range(i, context.shape.row_end(i) + 1):
            x, y = n + i - j, n - i - j
            xi = bisect_right(columns[x - 1], y) - 1
            row.append(k - xi)
        rows.append(tuple(row))
    return ShiftedTableau(context.shape, tuple(rows))


def theta_inv(tableau: ShiftedTableau, k: int) -> Multichain:
    """
    移位表格 → 多链

    P_ξ 是元素 ≤ k−ξ 的格子与 > k−ξ 的格子之间的阶梯边界。

    Args:
        tableau: 非空移位表格
        k: 多链长度

    Returns:
        Multichain: P_0 = path_of_shape(λ)，P_k = u^n

    Raises:
        PreconditionError: 表格非法、为空或 max(T) > k
    """
    if len(tableau.shape) == 0:
        raise PreconditionError("theta_inv", "表格不能为空")
    if tableau_class(tableau) == TableauClass.INVALID:
        raise PreconditionError("theta_inv", "表格的行或列不是单调不减的")
    if tableau.max_entry > k:
        raise PreconditionError("theta_inv", f"max(T) = {tableau.max_entry} 大于 k = {k}")

    n = tableau.shape.parts[0]
    # 每条竖线 x 上的格子自上而下为 i = 1, 2, ...，对应 y = x − 2i
    column_entries: list[list[int]] = []
    for x in range(1, n + 1):
        entries = []
        i = 1
        while tableau.shape.contains(i, n + i - x):
            entries.append(tableau.entry(i, n + i - x))
            i += 1
        column_entries.append(entries)

    paths = []
    for xi in range(k + 1):
        bound = k - xi
        heights = [
            x - 2 * bisect_right(column_entries[x - 1], bound)
            for x in range(1, n + 1)
        ]
        paths.append(path_from_heights(heights))
    return Multichain(tuple(paths))


def classify_via_theta(tableau: ShiftedTableau, k: int) -> MultichainClass:
    """
    在表格一侧判定多链类别，并与多链一侧的判定核对

    链 ⇔ 元素恰为 [k]；小区间 ⇔ 递增；饱和链 ⇔ 标准（且为链）。

    Raises:
        ConsistencyError: 两侧判定不一致
    """
    chain = theta_inv(tableau, k)
    values = {value for _, value in tableau.entries()}
    kind = tableau_class(tableau)
    is_chain = values == set(range(1, k + 1))
    result = MultichainClass(
        is_chain=is_chain,
        small_intervals=kind in (TableauClass.INCREASING, TableauClass.STANDARD),
        is_saturated=is_chain and kind == TableauClass.STANDARD,
    )
    chain_side = classify_multichain(chain, top_required=True)
    if result != chain_side:
        raise ConsistencyError(f"表格一侧 {result} 与多链一侧 {chain_side} 不一致")
    return result


def filling_tableau(path: Path) -> ShiftedTableau:
    """填充链 P < P~ < ... < u^n 在 θ 下的表格（递增，max = δ(P)）"""
    return theta(Multichain(tuple(filling_chain(path))))


# ==================== 公共检查 ====================

def _require_increasing(operation: str, tableau: ShiftedTableau, max_value: int) -> None:
    if not is_increasing(tableau):
        raise PreconditionError(operation, "表格不是递增表格")
    if tableau.max_entry != max_value:
        raise PreconditionError(
            operation, f"max(T) = {tableau.max_entry}，应为 {max_value}"
        )


def _require_shape(operation: str, tableau: ShiftedTableau, shape: Shape) -> None:
    if tableau.shape != shape:
        raise PreconditionError(
            operation, f"形状 {tableau.shape.parts} 与期望 {shape.parts} 不一致"
        )


def _build(shape: Shape, value_of) -> ShiftedTableau:
    rows = []
    for i in range(1, len(shape) + 1):
        rows.append(tuple(value_of(i, j) for j in range(i, shape.row_end(i) + 1)))
    return ShiftedTableau(shape, tuple(rows))


def _shape_or_empty(path: Path) -> Shape:
    return shape_of(path) if len(path) > 0 else Shape(())


# ==================== 乘积分解 ====================

def _check_product_factors(operation: str, p1: Path, p2: Path) -> None:
    if p1.word == "d" or len(p2) == 0:
        raise PreconditionError(operation, "要求 P_1 ≠ d 且 P_2 ≠ ε")
    if not p1.starts_with_down() or not classify(p1).is_dyck_suffix:
        raise PreconditionError(operation, f"P_1 = {p1.word} 不是以 d 开头的 Dyck 后缀")
    if not classify(p2).is_dyck_prefix:
        raise PreconditionError(operation, f"P_2 = {p2.word} 不是 Dyck 前缀")


def split_product(tableau: ShiftedTableau, n2: int, m1: int) -> tuple[ShiftedTableau, ShiftedTableau]:
    """
    将 λ(P_1 P_2) 的递增表格拆成 (T_1, T_2)

    t¹_ij = t_{i,j+n_2} − n_2，t²_ij = t_{i+m_1−1, j+m_1−1} − 2(m_1 − 1)。

    Args:
        tableau: 递增表格，max(T) = 2m_1 + n_2 − 1
        n2: |P_2|
        m1: |P_1|_d

    Returns:
        tuple[ShiftedTableau, ShiftedTableau]: 形状分别为 λ(P_1)、λ(dP_2)

    Raises:
        PreconditionError: 分解条件、形状或最大值不满足
    """
    if len(tableau.shape) == 0:
        raise PreconditionError("split_product", "表格不能为空")
    path = path_of_shape(tableau.shape)
    if not (0 <= n2 < len(path)):
        raise PreconditionError("split_product", f"n_2 = {n2} 超出范围")
    p1 = Path(path.word[:len(path) - n2])
    p2 = Path(path.word[len(path) - n2:])
    _check_product_factors("split_product", p1, p2)
    if p1.down_count != m1:
        raise PreconditionError("split_product", f"m_1 = {m1} 与 |P_1|_d = {p1.down_count} 不一致")
    _require_increasing("split_product", tableau, 2 * m1 + n2 - 1)

    for i in range(1, m1 + 1):
        for j in range(i, m1 + n2 + 1):
            if tableau.entry(i, j) != i + j - 1:
                raise ConsistencyError(f"西北块格子 ({i},{j}) 不等于 i + j − 1")

    first = _build(shape_of(p1), lambda i, j: tableau.entry(i, j + n2) - n2)
    second = _build(
        shape_of(Path("d") + p2),
        lambda i, j: tableau.entry(i + m1 - 1, j + m1 - 1) - 2 * (m1 - 1),
    )
    return first, second


def merge_product(first: ShiftedTableau, second: ShiftedTableau) -> ShiftedTableau:
    """
    split_product 的逆：西北块填 i + j − 1，其余由 T_1、T_2 平移得到

    Raises:
        PreconditionError: 输入不在值域内
        ConsistencyError: 拼接结果不是期望的递增表格
    """
    if len(first.shape) == 0 or len(second.shape) == 0:
        raise PreconditionError("merge_product", "表格不能为空")
    p1 = path_of_shape(first.shape)
    p2 = Path(path_of_shape(second.shape).word[1:])
    _check_product_factors("merge_product", p1, p2)
    m1 = p1.down_count
    n2 = len(p2)
    _require_increasing("merge_product", first, 2 * m1 - 1)
    _require_increasing("merge_product", second, n2 + 1)

    def value_of(i: int, j: int) -> int:
        if i > m1:
            return second.entry(i - m1 + 1, j - m1 + 1) + 2 * (m1 - 1)
        if j >= i + n2:
            return first.entry(i, j - n2) + n2
        return i + j - 1

    merged = _build(shape_of(p1 + p2), value_of)
    if not is_increasing(merged) or merged.max_entry != 2 * m1 + n2 - 1:
        raise ConsistencyError("拼接结果不是 max = 2m_1 + n_2 − 1 的递增表格")
    return merged


# ==================== 删除首行 ====================

def _check_strip_path(operation: str, path: Path) -> Path:
    # P = u^k Q 为至少有一个返回点的 Dyck 前缀，返回 Q
    path_class = classify(path)
    if not path_class.is_dyck_prefix or not path_class.return_points:
        raise PreconditionError(operation, f"P = {path.word!r} 不是带返回点的 Dyck 前缀")
    return path.strip_first_ascent()


def strip_first_row(tableau: ShiftedTableau) -> ShiftedTableau:
    """
    λ(dP) 的递增表格删去首行并整体减 2，得到 λ(Q) 的递增表格

    Raises:
        PreconditionError: 首行不是 1..|P|+1 或其他前置条件不满足
    """
    if len(tableau.shape) == 0:
        raise PreconditionError("strip_first_row", "表格不能为空")
    dp = path_of_shape(tableau.shape)
    path = Path(dp.word[1:])
    rest = _check_strip_path("strip_first_row", path)
    _require_increasing("strip_first_row", tableau, len(path) + 1)
    if tableau.rows[0] != tuple(range(1, len(path) + 2)):
        raise PreconditionError("strip_first_row", f"首行应为 1..{len(path) + 1}")

    stripped = ShiftedTableau(
        Shape(tableau.shape.parts[1:]),
        tuple(tuple(value - 2 for value in row) for row in tableau.rows[1:]),
    )
    if stripped.shape != shape_of(rest):
        raise ConsistencyError(f"删除首行后的形状不是 λ({rest.word})")
    return stripped


def unstrip_first_row(tableau: ShiftedTableau, path_length: int) -> ShiftedTableau:
    """
    strip_first_row 的逆：所有元素加 2 并补上首行 1..|P|+1

    Args:
        tableau: λ(Q) 的递增表格
        path_length: |P|（P = u^k Q，k = |P| − |Q| > 0）
    """
    if len(tableau.shape) == 0:
        raise PreconditionError("unstrip_first_row", "表格不能为空")
    rest = path_of_shape(tableau.shape)
    ups = path_length - len(rest)
    if ups <= 0:
        raise PreconditionError("unstrip_first_row", f"|P| = {path_length} 必须大于 |Q| = {len(rest)}")
    path = Path("u" * ups) + rest
    _check_strip_path("unstrip_first_row", path)
    _require_increasing("unstrip_first_row", tableau, len(path) - 1)

    rows = (tuple(range(1, len(path) + 2)),) + tuple(
        tuple(value + 2 for value in row) for row in tableau.rows
    )
    return ShiftedTableau(Shape((len(path) + 1,) + tableau.shape.parts), rows)


# ==================== 素 Dyck 映射 ====================

def _prime_parts(operation: str, dyck: Path) -> tuple[int, Path]:
    # 返回 (m, P)，其中 a = u^{k_1} P
    if not classify(dyck).is_dyck:
        raise PreconditionError(operation, f"a = {dyck.word!r} 不是 Dyck 路径")
    return len(dyck) // 2, dyck.strip_first_ascent()


def _v_bound_violation(tableau: ShiftedTableau, m: int) -> Optional[str]:
    # v_ij = 1 当且仅当 j ≤ m；v_ij ≤ 2m + 3 − i − j
    if tableau_class(tableau) == TableauClass.INVALID:
        return "V 不是移位表格"
    for (i, j), value in tableau.entries():
        if (value == 1) != (j <= m):
            return f"v_{i}{j} = {value} 违反 v_ij = 1 ⇔ j ≤ m"
        if value > 2 * m + 3 - i - j:
            return f"v_{i}{j} = {value} 违反 v_ij ≤ 2m + 3 − i − j"
    return None


def prime_map(tableau: ShiftedTableau, dyck: Path) -> ShiftedTableau:
    """
    λ(Pd) 的递增表格 T（max = 2m+1）→ 形状 λ(P) 的表格 V

    j ≤ m 时 v_ij = 1，否则 v_ij = t_{i,j+1} + 2 − i − j。

    Args:
        tableau: 递增表格 T
        dyck: Dyck 路径 a = u^{k_1} P

    Returns:
        ShiftedTableau: 满足两条界的表格 V
    """
    m, path = _prime_parts("prime_map", dyck)
    _require_shape("prime_map", tableau, shape_of(path + Path("d")))
    _require_increasing("prime_map", tableau, 2 * m + 1)

    bound = highest_valley_or_zero(dyck)
    for (i, j), value in tableau.entries():
        if value > i + j + bound:
            raise ConsistencyError(f"t_{i}{j} = {value} 超过 i + j + hv(a)")

    result = _build(
        _shape_or_empty(path),
        lambda i, j: 1 if j <= m else tableau.entry(i, j + 1) + 2 - i - j,
    )
    violation = _v_bound_violation(result, m)
    if violation:
        raise ConsistencyError(violation)
    return result


def prime_map_inverse(tableau: ShiftedTableau, dyck: Path) -> ShiftedTableau:
    """
    prime_map 的逆：j ≤ m+1 时 t_ij = i + j − 1，否则 t_ij = v_{i,j−1} + i + j − 3

    Raises:
        PreconditionError: V 的形状或上下界不满足
    """
    m, path = _prime_parts("prime_map_inverse", dyck)
    _require_shape("prime_map_inverse", tableau, _shape_or_empty(path))
    violation = _v_bound_violation(tableau, m)
    if violation:
        raise PreconditionError("prime_map_inverse", violation)

    result = _build(
        shape_of(path + Path("d")),
        lambda i, j: i + j - 1 if j <= m + 1 else tableau.entry(i, j - 1) + i + j - 3,
    )
    if not is_increasing(result) or result.max_entry != 2 * m + 1:
        raise ConsistencyError("逆映射结果不是 max = 2m+1 的递增表格")
    return result


def _check_typev_realisation(operation: str, sigma: Multichain, dyck: Path, error) -> None:
    m = len(dyck) // 2
    k = highest_valley_or_zero(dyck) + 3
    if sigma.length != k:
        raise error(operation, f"多链长度 {sigma.length}，应为 hv(a) + 3 = {k}")
    if sigma[0] != dyck:
        raise error(operation, "σ_0 必须等于 a")
    if sigma[k - 1] != Path("u" * m + "d" * m):
        raise error(operation, "σ_{k−1} 必须等于 u^m d^m")
    if sigma[k] != top_path(2 * m):
        raise error(operation, "σ_k 必须等于 u^{2m}")
    if not is_type_v(Multichain(sigma.paths[:k - 2])):
        raise error(operation, "σ_0 ≤ ... ≤ σ_{k−3} 不是 V 型多链")


def _consistency(operation: str, message: str) -> ConsistencyError:
    return ConsistencyError(f"{operation}: {message}")


def v_tableau_to_typeV_chain(tableau: ShiftedTableau, dyck: Path) -> Multichain:
    """
    表格 V → 多链 σ_0 = a ≤ ... ≤ σ_{k−1} = u^m d^m ≤ σ_k = u^{2m}，k = hv(a) + 3

    对 P（a 去掉首个上升段）应用 θ⁻¹，再在每条路径前补回 u^{k_1}。

    Raises:
        PreconditionError: V 的形状或上下界不满足
    """
    m, path = _prime_parts("v_tableau_to_typeV_chain", dyck)
    _require_shape("v_tableau_to_typeV_chain", tableau, _shape_or_empty(path))
    violation = _v_bound_violation(tableau, m)
    if violation:
        raise PreconditionError("v_tableau_to_typeV_chain", violation)

    k = highest_valley_or_zero(dyck) + 3
    if len(path) == 0:
        stripped = [Path("")] * (k + 1)
    else:
        stripped = list(theta_inv(tableau, k).paths)
    prefix = Path("u" * dyck.first_ascent_length)
    sigma = Multichain(tuple(prefix + s for s in stripped))
    _check_typev_realisation("v_tableau_to_typeV_chain", sigma, dyck, _consistency)
    return sigma


def typev_chain_to_v_tableau(sigma: Multichain, dyck: Path) -> ShiftedTableau:
    """
    v_tableau_to_typeV_chain 的逆

    Raises:
        PreconditionError: 多链不是所要求的形式
    """
    m, path = _prime_parts("typev_chain_to_v_tableau", dyck)
    _check_typev_realisation("typev_chain_to_v_tableau", sigma, dyck, PreconditionError)
    if len(path) == 0:
        return ShiftedTableau(Shape(()), ())

    ups = dyck.first_ascent_length
    stripped = Multichain(tuple(Path(s.word[ups:]) for s in sigma.paths))
    result = theta(stripped)
    violation = _v_bound_violation(result, m)
    if violation:
        raise ConsistencyError(violation)
    return result


# ==================== Dyck 前缀映射 ====================

@dataclass(frozen=True)
class PrefixBands:
    """
    Dyck 前缀 P = a_0 u a_1 ... u a_k 的带信息

    Attributes:
        components: (a_0, ..., a_k)
        k: 终点高度
        h: max hv(a_l)（ε 分量按 0 计）
        n: |duP|
        band: band[j−1] 为第 j 列所在的带编号 l ∈ [−1, k]
    """
    components: tuple[Path, ...]
    k: int
    h: int
    n: int
    band: tuple[int, ...]

    @property
    def levels(self) -> int:
        """多链 (W_r) 的长度 h + k + 1"""
        return self.h + self.k + 1

    def b(self, j: int, r: int) -> int:
        """b_jr = min{h − r + k, l} + (h − r)[r ≤ h]"""
        value = min(self.h - r + self.k, self.band[j - 1])
        if r <= self.h:
            value += self.h - r
        return value


def prefix_bands(path: Path) -> PrefixBands:
    """
    计算 Dyck 前缀的带划分：锚点列 j_l = n − 1 − l − ½Σ_{ν≤l}|a_ν|

    j ∈ [1, j_k) 属于带 k，j ∈ [j_ν, j_{ν−1}) 属于带 ν，j = n 属于带 −1。
    """
    components = tuple(decompose_prefix(path))
    k = len(components) - 1
    n = len(path) + 2
    h = max(highest_valley_or_zero(component) for component in components)

    anchors = {-1: n}
    half_total = 0
    for level, component in enumerate(components):
        half_total += len(component) // 2
        anchors[level] = n - 1 - level - half_total

    band = []
    for j in range(1, n + 1):
        if j == n:
            band.append(-1)
        elif j < anchors[k]:
            band.append(k)
        else:
            band.append(next(
                level for level in range(k + 1)
                if anchors[level] <= j < anchors[level - 1]
            ))
    return PrefixBands(components=components, k=k, h=h, n=n, band=tuple(band))


def _require_prefix(operation: str, path: Path) -> None:
    if not classify(path).is_dyck_prefix:
        raise PreconditionError(operation, f"P = {path.word!r} 不是 Dyck 前缀")


def _row_lengths(cells: set[tuple[int, int]], shape: Shape) -> Optional[tuple[int, ...]]:
    # 若格子集是移位图则返回各行长度，否则返回 None
    lengths = []
    for i in range(1, len(shape) + 1):
        length = 0
        for j in range(i, shape.row_end(i) + 1):
            if (i, j) in cells:
                if j != i + length:
                    return None
                length += 1
        lengths.append(length)
    while lengths and lengths[-1] == 0:
        lengths.pop()
    if 0 in lengths:
        return None
    if any(a <= b for a, b in zip(lengths, lengths[1:])):
        return None
    return tuple(lengths)


def prefix_map(tableau: ShiftedTableau, path: Path) -> Multichain:
    """
    λ(duP) 的递增表格（max = |P| + 2）→ 多链 (W_r)_{r ∈ [0, h+k+1]}

    F_r 为满足 t_ij ≤ i + j + b_jr 的格子，其对应路径为 du W_r。

    Raises:
        PreconditionError: P 不是 Dyck 前缀、表格不在定义域内或某个 F_r 不是移位图
    """
    _require_prefix("prefix_map", path)
    bands = prefix_bands(path)
    shape = shape_of(Path("du") + path)
    _require_shape("prefix_map", tableau, shape)
    _require_increasing("prefix_map", tableau, bands.n)

    chain = []
    for r in range(bands.levels + 1):
        cells = {
            (i, j) for (i, j), value in tableau.entries()
            if value <= i + j + bands.b(j, r)
        }
        lengths = _row_lengths(cells, shape)
        if lengths is None:
            raise PreconditionError("prefix_map", f"F_{r} 不是移位图")
        boundary = path_of_shape(Shape(lengths))
        if not boundary.word.startswith("du"):
            raise PreconditionError("prefix_map", f"F_{r} 对应的路径不以 du 开头")
        chain.append(Path(boundary.word[2:]))

    result = Multichain(tuple(chain))
    ok, message = check_prefix_multichain(result, path)
    if not ok:
        raise ConsistencyError(f"prefix_map: {message}")
    return result


def prefix_map_inverse(chain: Multichain, path: Path) -> ShiftedTableau:
    """
    prefix_map 的逆：在 F_r ∖ F_{r+1} 上令 t_ij = i + j + b_jr

    Raises:
        PreconditionError: 多链不满足性质 (i)/(ii)
    """
    _require_prefix("prefix_map_inverse", path)
    ok, message = check_prefix_multichain(chain, path)
    if not ok:
        raise PreconditionError("prefix_map_inverse", message)

    bands = prefix_bands(path)
    diagrams = [shape_of(Path("du") + w) for w in chain.paths]

    def value_of(i: int, j: int) -> int:
        level = max(r for r, diagram in enumerate(diagrams) if diagram.contains(i, j))
        return i + j + bands.b(j, level)

    result = _build(diagrams[0], value_of)
    if not is_increasing(result) or result.max_entry != bands.n:
        raise ConsistencyError("prefix_map_inverse: 结果不是 max = |P| + 2 的递增表格")
    return result


def check_prefix_multichain(chain: Multichain, path: Path) -> tuple[bool, Optional[str]]:
    """
    检查多链 (W_r) 是否满足 Dyck 前缀映射的值域条件

    (i) r ∈ [0,h] 时 W_r = w_r0 u ... u w_rk，w_rl 与 a_l 等长；r ≤ h − h_l 时 w_rl = a_l，
        且 (w_rl)_{r ∈ [h−h_l, h]} 为 V 型多链；
    (ii) r ∈ [h, h+k] 时 w_h0 u w_h1 ... u w_{h,h+k−r} 是 W_r 的前缀。

    Returns:
        tuple[bool, Optional[str]]: (是否满足, 错误信息)
    """
    bands = prefix_bands(path)
    h, k = bands.h, bands.k
    if chain.length != bands.levels:
        return False, f"多链长度 {chain.length}，应为 h + k + 1 = {bands.levels}"
    if chain.base_length != len(path):
        return False, "路径长度与 P 不一致"
    if chain[0] != path:
        return False, "W_0 必须等于 P"

    pieces: list[list[Path]] = []
    for r in range(h + 1):
        w = chain[r]
        if not classify(w).is_dyck_prefix:
            return False, f"W_{r} 不是 Dyck 前缀"
        parts = decompose_prefix(w)
        if len(parts) != k + 1:
            return False, f"W_{r} 的终点高度不是 {k}"
        for level, (part, component) in enumerate(zip(parts, bands.components)):
            if len(part) != len(component):
                return False, f"w_{r}{level} 与 a_{level} 长度不同"
        pieces.append(parts)

    for level, component in enumerate(bands.components):
        h_level = highest_valley_or_zero(component)
        for r in range(h - h_level + 1):
            if pieces[r][level] != component:
                return False, f"w_{r}{level} 应等于 a_{level}"
        band_chain = Multichain(tuple(pieces[r][level] for r in range(h - h_level, h + 1)))
        if not is_type_v(band_chain):
            return False, f"第 {level} 个分量的多链不是 V 型"

    for r in range(h, h + k + 1):
        head = compose_prefix(pieces[h][:h + k - r + 1])
        if not chain[r].word.startswith(head.word):
            return False, f"{head.word} 不是 W_{r} 的前缀"

    return True, None


def prefix_chain_words(chain: Multichain | Sequence[Path]) -> list[str]:
    """多链 (W_r) 对应的 du W_r 文本"""
    paths = chain.paths if isinstance(chain, Multichain) else chain
    return ["du" + w.word for w in paths]

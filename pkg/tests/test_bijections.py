"""
测试双射模块
"""
import pytest
from pathlib import Path as FilePath
import sys

# 添加项目根目录到 Python 路径
sys.path.insert(0, str(FilePath(__file__).parent.parent))

from src.utils.bijections import (
    check_prefix_multichain,
    classify_via_theta,
    filling_tableau,
    merge_product,
    prefix_bands,
    prefix_chain_words,
    prefix_map,
    prefix_map_inverse,
    prime_map,
    prime_map_inverse,
    split_product,
    strip_first_row,
    theta,
    theta_context,
    theta_inv,
    typev_chain_to_v_tableau,
    unstrip_first_row,
    v_tableau_to_typeV_chain,
)
from src.utils.lattice import Multichain, degree, filling_chain, is_type_v
from src.utils.paths import Path, classify, dyck_paths, dyck_prefixes, paths_starting_with_down
from src.utils.tableaux import (
    Shape,
    ShiftedTableau,
    TableauClass,
    count_increasing,
    enumerate_increasing,
    enumerate_weak,
    shape_of,
    tableau_class,
)
from src.utils.validator import PreconditionError


def _span(start, stop):
    return list(range(start, stop + 1))


def _product_splits(n):
    """长度为 n 的全部合法乘积分解 (P, n_2, m_1)"""
    for path in paths_starting_with_down(n):
        for n2 in range(1, n - 1):
            head, tail = Path(path.word[:n - n2]), Path(path.word[n - n2:])
            if head.word != "d" and classify(head).is_dyck_suffix and classify(tail).is_dyck_prefix:
                yield path, n2, head.down_count


@pytest.fixture
def sample_chain():
    """k = 11 的多链（自下而上）"""
    return Multichain.from_words([
        "duduud", "duudud", "duudud", "uduudd", "uududu", "uuuddu",
        "uuuudu", "uuuudu", "uuuudu", "uuuudu", "uuuuud", "uuuuuu",
    ])


@pytest.fixture
def sample_tableau():
    """上述多链在 θ 下的表格"""
    return ShiftedTableau.from_rows([[1, 2, 6, 7, 8, 9], [6, 6, 9, 11], [8]])


@pytest.fixture
def prime_example():
    """素 Dyck 映射的例子：(a, T, V)"""
    dyck = Path("uududduuududdudd")
    tableau = ShiftedTableau.from_rows([
        _span(1, 13) + [15, 16],
        _span(3, 13) + [15, 16],
        _span(5, 11) + [13, 14, 15, 16, 17],
        _span(7, 12) + [14, 17],
        _span(9, 13) + [15],
        [11, 12, 13, 14, 16],
        [13, 14, 15],
        [15, 16],
        [17],
    ])
    v_tableau = ShiftedTableau.from_rows([
        [1] * 8 + [2, 2, 2, 2, 3, 3],
        [1] * 7 + [2, 2, 2, 3, 3],
        [1] * 6 + [3, 3, 3, 3, 3],
        [1, 1, 1, 1, 1, 3, 5],
        [1, 1, 1, 1, 3],
        [1, 1, 1, 3],
        [1, 1],
        [1],
    ])
    return dyck, tableau, v_tableau


@pytest.fixture
def prefix_example():
    """Dyck 前缀映射的例子：(P, T, 多链 W_0..W_6)"""
    du_words = [
        "duuuduuddduuduududduududuuduududdduudud",
        "duuuduuddduuduududduududuuduuudddduudud",
        "duuuuudddduuduududduududuuuududddduuudd",
        "duuuuudddduuduududduududuuuududddduuudu",
        "duuuuudddduuduududduuduuuudududduduuudu",
        "duuuuudddduuuuududdduduuuuduuduuuuuuduu",
        "duuuuuuududuuuuuudddduududdduuuuduuuudu",
    ]
    tableau = ShiftedTableau.from_rows([
        _span(1, 39),
        _span(3, 33) + [35, 36, 38, 39],
        _span(5, 33) + [35, 36, 37],
        _span(7, 28) + _span(30, 38),
        _span(9, 29) + _span(31, 39),
        _span(11, 30) + [32, 33, 34, 35, 37, 38, 39],
        _span(13, 31) + [33, 34, 35, 37, 38],
        _span(15, 30) + _span(32, 36) + [38],
        _span(17, 30) + _span(32, 37) + [39],
        _span(19, 31) + _span(33, 37),
        _span(21, 32) + [34, 37, 38, 39],
        _span(23, 29) + [31, 32, 33, 35, 38, 39],
        [25, 26, 28, 30, 31, 32, 33, 34, 35, 39],
        _span(29, 36),
        _span(31, 36) + [38],
        [33, 34, 36, 37, 38, 39],
        [36, 37, 39],
        [39],
    ])
    chain = Multichain.from_words([word[2:] for word in du_words])
    return Path(du_words[0][2:]), tableau, chain, du_words


class TestTheta:
    """测试 θ 与 θ⁻¹"""

    def test_theta(self, sample_chain, sample_tableau):
        """测试多链 → 表格"""
        assert theta(sample_chain) == sample_tableau

    def test_theta_inv(self, sample_chain, sample_tableau):
        """测试表格 → 多链"""
        assert theta_inv(sample_tableau, 11) == sample_chain

    def test_bottom_repeats(self, sample_chain, sample_tableau):
        """测试底端重复次数"""
        context = theta_context(sample_chain)
        assert context.k == 11
        assert context.bottom_repeats(sample_tableau) == 1

    def test_single_cell(self):
        """测试单格表格"""
        assert theta_inv(ShiftedTableau.from_rows([[1]]), 2) == Multichain.from_words(["d", "d", "u"])

    def test_rejects_large_entry(self):
        """测试 max(T) > k"""
        with pytest.raises(PreconditionError):
            theta_inv(ShiftedTableau.from_rows([[2]]), 1)

    def test_rejects_invalid_tableau(self):
        """测试非法表格"""
        with pytest.raises(PreconditionError):
            theta_inv(ShiftedTableau.from_rows([[2, 1]]), 3)

    def test_rejects_wrong_endpoints(self):
        """测试顶端不是 u^n 或底端以 u 开头"""
        with pytest.raises(PreconditionError):
            theta(Multichain.from_words(["dd", "du"]))
        with pytest.raises(PreconditionError):
            theta(Multichain.from_words(["ud", "uu"]))

    def test_round_trip(self):
        """测试小规模往返（n ≤ 3，k ≤ 3）"""
        for n in range(1, 4):
            for path in paths_starting_with_down(n):
                shape = shape_of(path)
                for k in range(1, 4):
                    for tableau in enumerate_weak(shape, k):
                        chain = theta_inv(tableau, k)
                        assert chain.bottom == path
                        assert theta(chain) == tableau

    def test_classification(self):
        """测试两侧分类一致"""
        saturated = classify_via_theta(ShiftedTableau.from_rows([[1, 2], [3]]), 3)
        assert saturated.is_chain and saturated.small_intervals and saturated.is_saturated
        repeated = classify_via_theta(ShiftedTableau.from_rows([[1]]), 2)
        assert not repeated.is_chain and repeated.small_intervals

    def test_filling_tableau(self):
        """测试填充链对应 max = δ(P) 的递增表格"""
        for path in paths_starting_with_down(6):
            tableau = filling_tableau(path)
            assert tableau.max_entry == degree(path)
            assert tableau_class(tableau) != TableauClass.WEAK
            assert theta_inv(tableau, degree(path)).paths == tuple(filling_chain(path))


class TestProductSplit:
    """测试乘积分解"""

    def test_split_and_merge(self):
        """测试 P = dd·u 的分解"""
        tableau = ShiftedTableau.from_rows([[1, 2, 3], [3, 4]])
        first, second = split_product(tableau, n2=1, m1=2)
        assert first == ShiftedTableau.from_rows([[1, 2], [3]])
        assert second == ShiftedTableau.from_rows([[1, 2]])
        assert merge_product(first, second) == tableau

    def test_rejects_empty_second_factor(self):
        """测试 P_2 = ε"""
        with pytest.raises(PreconditionError):
            split_product(ShiftedTableau.from_rows([[1, 2, 3], [3, 4]]), n2=0, m1=3)

    def test_rejects_wrong_down_count(self):
        """测试 m_1 与 P_1 不一致"""
        with pytest.raises(PreconditionError):
            split_product(ShiftedTableau.from_rows([[1, 2, 3], [3, 4]]), n2=1, m1=1)

    def test_rejects_wrong_max(self):
        """测试 max(T) 不等于 2m_1 + n_2 − 1"""
        with pytest.raises(PreconditionError):
            split_product(ShiftedTableau.from_rows([[1, 2, 3], [4, 5]]), n2=1, m1=2)


class TestStripFirstRow:
    """测试删除首行"""

    def test_strip_and_unstrip(self):
        """测试 dP = dud"""
        tableau = ShiftedTableau.from_rows([[1, 2, 3], [3]])
        stripped = strip_first_row(tableau)
        assert stripped == ShiftedTableau.from_rows([[1]])
        assert unstrip_first_row(stripped, 2) == tableau

    def test_rejects_prefix_without_return(self):
        """测试 P 没有返回点"""
        # dP = duu，P = uu 没有返回点
        with pytest.raises(PreconditionError):
            strip_first_row(ShiftedTableau.from_rows([[1, 2, 3]]))

    def test_unstrip_rejects_short_path(self):
        """测试 |P| 不大于 |Q|"""
        with pytest.raises(PreconditionError):
            unstrip_first_row(ShiftedTableau.from_rows([[1]]), 1)


class TestPrimeMap:
    """测试素 Dyck 映射"""

    def test_prime_map(self, prime_example):
        """测试 T → V"""
        dyck, tableau, v_tableau = prime_example
        assert prime_map(tableau, dyck) == v_tableau

    def test_inverse(self, prime_example):
        """测试 V → T"""
        dyck, tableau, v_tableau = prime_example
        assert prime_map_inverse(v_tableau, dyck) == tableau

    def test_type_v_realisation(self, prime_example):
        """测试 V 对应的多链"""
        dyck, _, v_tableau = prime_example
        sigma = v_tableau_to_typeV_chain(v_tableau, dyck)
        assert sigma.length == 5
        assert sigma.bottom == dyck
        assert sigma[4] == Path("u" * 8 + "d" * 8)
        assert sigma.top.is_top()
        assert is_type_v(Multichain(sigma.paths[:3]))
        assert typev_chain_to_v_tableau(sigma, dyck) == v_tableau

    def test_empty_prime(self):
        """测试 a = ε"""
        dyck = Path("")
        tableau = ShiftedTableau.from_rows([[1]])
        v_tableau = prime_map(tableau, dyck)
        assert len(v_tableau.shape) == 0
        sigma = v_tableau_to_typeV_chain(v_tableau, dyck)
        assert sigma.words() == ["", "", "", ""]
        assert prime_map_inverse(v_tableau, dyck) == tableau

    def test_rejects_non_dyck(self):
        """测试 a 不是 Dyck 路径"""
        with pytest.raises(PreconditionError):
            prime_map(ShiftedTableau.from_rows([[1]]), Path("ud" + "u"))

    def test_rejects_bound_violation(self):
        """测试 V 违反上下界"""
        # a = uudd：m = 2，V 的形状为 (2,1)，j ≤ 2 的格子必须为 1
        with pytest.raises(PreconditionError):
            prime_map_inverse(ShiftedTableau.from_rows([[1, 2], [2]]), Path("uudd"))
        assert prime_map_inverse(ShiftedTableau.from_rows([[1, 1], [1]]), Path("uudd")) == (
            ShiftedTableau.from_rows([[1, 2, 3], [3, 4], [5]])
        )


class TestPrefixMap:
    """测试 Dyck 前缀映射"""

    def test_bands(self, prefix_example):
        """测试带划分的层数"""
        path, _, _, _ = prefix_example
        bands = prefix_bands(path)
        assert bands.k == 3
        assert bands.h == 2
        assert bands.levels == 6
        assert bands.n == 39

    def test_prefix_map(self, prefix_example):
        """测试 T → (W_r)"""
        path, tableau, chain, du_words = prefix_example
        result = prefix_map(tableau, path)
        assert result == chain
        assert prefix_chain_words(result) == du_words

    def test_inverse(self, prefix_example):
        """测试 (W_r) → T"""
        path, tableau, chain, _ = prefix_example
        assert prefix_map_inverse(chain, path) == tableau

    def test_range_check(self, prefix_example):
        """测试值域条件"""
        path, _, chain, _ = prefix_example
        assert check_prefix_multichain(chain, path) == (True, None)
        shortened = Multichain(chain.paths[:-1])
        ok, message = check_prefix_multichain(shortened, path)
        assert not ok
        assert "h + k + 1" in message

    def test_inverse_rejects_bad_chain(self, prefix_example):
        """测试不在值域内的多链"""
        path, _, chain, _ = prefix_example
        with pytest.raises(PreconditionError):
            prefix_map_inverse(Multichain(chain.paths[:-1]), path)

    def test_rejects_non_prefix(self):
        """测试 P 不是 Dyck 前缀"""
        with pytest.raises(PreconditionError):
            prefix_map(ShiftedTableau.from_rows([[1, 2, 3], [3]]), Path("d"))

    def test_small_round_trip(self):
        """测试小前缀的往返：ε 对应 λ(du) 的唯一表格"""
        tableau = ShiftedTableau.from_rows([[1, 2]])
        chain = prefix_map(tableau, Path(""))
        assert chain.words() == ["", ""]
        assert prefix_map_inverse(chain, Path("")) == tableau


class TestExhaustiveRoundTrips:
    """测试四个表格分解在全部小输入上的往返"""

    def test_split_product(self):
        """测试乘积分解往返并落在指定形状与最大值上（n ≤ 7）"""
        for n in range(3, 8):
            for path, n2, m1 in _product_splits(n):
                head, tail = Path(path.word[:n - n2]), Path(path.word[n - n2:])
                for tableau in enumerate_increasing(shape_of(path), 2 * m1 + n2 - 1, exact_max=True):
                    first, second = split_product(tableau, n2, m1)
                    assert first.shape == shape_of(head)
                    assert second.shape == shape_of(Path("d") + tail)
                    assert first.max_entry == 2 * m1 - 1
                    assert second.max_entry == n2 + 1
                    assert merge_product(first, second) == tableau

    def test_split_product_counts(self):
        """测试计数满足 count(T) = count(T_1)·count(T_2)（n ≤ 8）"""
        for n in range(3, 9):
            for path, n2, m1 in _product_splits(n):
                head, tail = Path(path.word[:n - n2]), Path(path.word[n - n2:])
                whole = count_increasing(shape_of(path), 2 * m1 + n2 - 1, exact_max=True)
                first = count_increasing(shape_of(head), 2 * m1 - 1, exact_max=True)
                second = count_increasing(shape_of(Path("d") + tail), n2 + 1, exact_max=True)
                assert whole == first * second, (path.word, n2)

    def test_strip_first_row(self):
        """测试删除首行往返（|dP| ≤ 7）"""
        for n in range(2, 8):
            for prefix in dyck_prefixes(n - 1):
                if not classify(prefix).return_points:
                    continue
                target = Path("d") + prefix
                for tableau in enumerate_increasing(shape_of(target), n, exact_max=True):
                    stripped = strip_first_row(tableau)
                    assert unstrip_first_row(stripped, len(prefix)) == tableau

    def test_prime_map_and_realisation(self):
        """测试素 Dyck 映射与 V 型实现往返（|a| ≤ 6）"""
        for m in range(0, 4):
            for dyck in dyck_paths(m):
                shape = shape_of(dyck.strip_first_ascent() + Path("d"))
                for tableau in enumerate_increasing(shape, 2 * m + 1, exact_max=True):
                    v = prime_map(tableau, dyck)
                    assert prime_map_inverse(v, dyck) == tableau
                    sigma = v_tableau_to_typeV_chain(v, dyck)
                    assert sigma.bottom == dyck and sigma.top.is_top()
                    assert typev_chain_to_v_tableau(sigma, dyck) == v

    def test_prefix_map(self):
        """测试 Dyck 前缀映射往返并满足值域条件（|P| ≤ 5）"""
        for n in range(0, 6):
            for prefix in dyck_prefixes(n):
                target = Path("du") + prefix
                for tableau in enumerate_increasing(shape_of(target), n + 2, exact_max=True):
                    chain = prefix_map(tableau, prefix)
                    assert check_prefix_multichain(chain, prefix) == (True, None)
                    assert prefix_map_inverse(chain, prefix) == tableau


if __name__ == '__main__':
    pytest.main([__file__, '-v'])

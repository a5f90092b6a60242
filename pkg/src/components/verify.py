"""
verify 命令 - 在穷举范围内比对快速算法、双射与穷举参照

每个套件按路径长度从小到大检查，遇到第一个不一致即停止，
因此报告的反例在该套件的枚举顺序下是最小的。
"""
import random
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Callable, Iterator, Optional

from ..config import SUITE_NAMES, get_max_n, get_prop3_limit
from ..utils.bijections import (
    classify_via_theta,
    merge_product,
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
from ..utils.exporter import Report, SuiteResult
from ..utils.formulas import (
    enumerate_typeV,
    f_by_tableaux,
    f_recursive,
    prop2_rhs,
    prop3_rhs,
    saturated_count,
    typev_counts,
)
from ..utils.lattice import Multichain, up_set
from ..utils.oracles import (
    brute_f,
    brute_saturated_count,
    enumerate_multichains,
    enumerate_tableaux,
    enumerate_typeV_brute,
)
from ..utils.paths import (
    Path,
    all_paths,
    classify,
    dyck_paths,
    dyck_prefixes,
    paths_starting_with_down,
    top_path,
    valley_peak_profile,
)
from ..utils.tableaux import (
    TableauClass,
    count_standard_formula,
    count_weak,
    enumerate_increasing,
    enumerate_weak,
    shape_of,
)
from ..utils.validator import (
    ConsistencyError,
    LimitExceededError,
    ValidationError,
    validate_max_n,
)

# 标准表格逐格回溯只在格子数不超过该值时进行
STANDARD_BACKTRACK_CELLS = 12

# 多链穷举只在路径长度 n 不超过该值时与 count_weak 比对
MULTICHAIN_ORACLE_LENGTH = 4

# θ 套件在 n 不超过该值时遍历全部弱表格，更长时改为抽样
THETA_EXHAUSTIVE_LENGTH = 4
THETA_SAMPLES = 20
THETA_SEED = "shifted-chains"


class Mismatch(Exception):
    """套件发现的不一致"""
    pass


def _expect(condition: bool, message: str) -> None:
    if not condition:
        raise Mismatch(message)


# ==================== 套件 ====================

def suite_f_threeway(max_n: int) -> Iterator[str]:
    """穷举法、表格法、递归法三者计算的 f(P) 一致"""
    for n in range(1, max_n + 1):
        for path in all_paths(n):
            brute = brute_f(path)
            tableaux = f_by_tableaux(path)
            recursive = f_recursive(path).value
            _expect(
                brute == tableaux == recursive,
                f"f({path.word}): bruteforce={brute}, tableaux={tableaux}, recursive={recursive}",
            )
            yield path.word


def suite_prop2(max_n: int) -> Iterator[str]:
    """f(uad) = Σ V(a,s) I(s)"""
    for m in range(0, (max_n - 2) // 2 + 1):
        for dyck in dyck_paths(m):
            target = Path("u") + dyck + Path("d")
            left, right = f_by_tableaux(target), prop2_rhs(dyck)
            _expect(left == right, f"a={dyck.word!r}: f(uad)={left}, 求和={right}")
            yield dyck.word


def suite_prop3(max_n: int) -> Iterator[str]:
    """f(duP) = Σ Π V(a_l,s_l) J(s_0 V_1)，|duP| 不超过 SHIFTED_CHAINS_PROP3_LIMIT"""
    bound = min(max_n, get_prop3_limit())
    for length in range(0, bound - 1):
        for prefix in dyck_prefixes(length):
            target = Path("du") + prefix
            left, right = f_by_tableaux(target), prop3_rhs(prefix)
            _expect(left == right, f"P={prefix.word!r}: f(duP)={left}, 求和={right}")
            yield prefix.word


def _prop3_coverage(max_n: int) -> Optional[str]:
    limit = get_prop3_limit()
    if max_n <= limit:
        return None
    return f"|duP| ≤ {limit}（SHIFTED_CHAINS_PROP3_LIMIT）"


def suite_hook(max_n: int) -> Iterator[str]:
    """乘积公式 = 饱和链穷举计数（小形状再与标准表格回溯比对）"""
    for n in range(1, max_n + 1):
        for path in paths_starting_with_down(n):
            shape = shape_of(path)
            formula = count_standard_formula(shape)
            _expect(formula == saturated_count(path), f"{path.word}: saturated_count 不等于乘积公式")
            brute = brute_saturated_count(path)
            _expect(formula == brute, f"{path.word}: 乘积公式={formula}, 饱和链穷举={brute}")
            if shape.size <= STANDARD_BACKTRACK_CELLS:
                listed = len(enumerate_tableaux(shape, shape.size, TableauClass.STANDARD))
                _expect(formula == listed, f"{path.word}: 乘积公式={formula}, 标准表格回溯={listed}")
            yield path.word


def _check_theta_chain(path: Path, k: int, chain: Multichain) -> None:
    tableau = theta(chain)
    _expect(tableau.shape == shape_of(path), f"{path.word}, k={k}: θ 的形状不是 λ(P)")
    _expect(theta_inv(tableau, k) == chain, f"{path.word}, k={k}: θ⁻¹(θ(C)) ≠ C，C={chain.words()}")
    classify_via_theta(tableau, k)
    repeats = sum(1 for p in chain.paths if p == path)
    _expect(
        repeats == theta_context(chain).bottom_repeats(tableau),
        f"{path.word}, k={k}: 底端重复 {repeats} 次，T={tableau.rows}",
    )


def _random_multichain(path: Path, k: int, rng: random.Random) -> Multichain:
    # 逐层在上集中随机取下一条路径，最后一层固定为 u^n
    paths = [path]
    for _ in range(k - 1):
        paths.append(rng.choice(list(up_set(paths[-1]))))
    paths.append(top_path(len(path)))
    return Multichain(tuple(paths))


def suite_theta(max_n: int) -> Iterator[str]:
    """θ 往返、两侧分类一致、底端重复次数 = k − max(T) + 1

    n ≤ THETA_EXHAUSTIVE_LENGTH 时遍历全部弱表格；更长的路径每组 (P, k)
    只检查 THETA_SAMPLES 条带固定种子的随机多链。
    """
    for n in range(1, max_n + 1):
        for path in paths_starting_with_down(n):
            shape = shape_of(path)
            for k in range(1, n + 3):
                if n > THETA_EXHAUSTIVE_LENGTH:
                    rng = random.Random(f"{THETA_SEED}:{path.word}:{k}")
                    for _ in range(THETA_SAMPLES):
                        _check_theta_chain(path, k, _random_multichain(path, k, rng))
                        yield f"{path.word}/{k}"
                    continue
                if n <= MULTICHAIN_ORACLE_LENGTH:
                    listed = len(enumerate_multichains(path, k))
                    _expect(
                        listed == count_weak(shape, k),
                        f"{path.word}, k={k}: 多链 {listed} 条，表格 {count_weak(shape, k)} 个",
                    )
                for tableau in enumerate_weak(shape, k):
                    chain = theta_inv(tableau, k)
                    _expect(chain.bottom == path, f"{path.word}, k={k}: θ⁻¹ 的底端不是 P")
                    _expect(theta(chain) == tableau, f"{path.word}, k={k}: θ(θ⁻¹(T)) ≠ T，T={tableau.rows}")
                    _check_theta_chain(path, k, chain)
                    yield f"{path.word}/{k}"


def _theta_coverage(max_n: int) -> Optional[str]:
    if max_n <= THETA_EXHAUSTIVE_LENGTH:
        return None
    return (
        f"n ≤ {THETA_EXHAUSTIVE_LENGTH} 穷举；{THETA_EXHAUSTIVE_LENGTH} < n ≤ {max_n} "
        f"每组 (P, k) 抽样 {THETA_SAMPLES} 条多链"
    )


def _product_splits(n: int) -> Iterator[tuple[Path, int, int]]:
    for path in paths_starting_with_down(n):
        for n2 in range(1, n - 1):
            head, tail = Path(path.word[:n - n2]), Path(path.word[n - n2:])
            if head.word != "d" and classify(head).is_dyck_suffix and classify(tail).is_dyck_prefix:
                yield path, n2, head.down_count


def suite_bijections(max_n: int) -> Iterator[str]:
    """四个表格分解双射的往返与值域"""
    for n in range(1, max_n + 1):
        for path, n2, m1 in _product_splits(n):
            for tableau in enumerate_increasing(shape_of(path), 2 * m1 + n2 - 1, exact_max=True):
                first, second = split_product(tableau, n2, m1)
                _expect(merge_product(first, second) == tableau, f"split_product({path.word}, n2={n2}) 往返失败")
                yield f"split:{path.word}/{n2}"

        for prefix in dyck_prefixes(n - 1):
            if not classify(prefix).return_points:
                continue
            target = Path("d") + prefix
            for tableau in enumerate_increasing(shape_of(target), n, exact_max=True):
                stripped = strip_first_row(tableau)
                _expect(unstrip_first_row(stripped, len(prefix)) == tableau, f"strip_first_row({target.word}) 往返失败")
                yield f"strip:{target.word}"

        if n % 2 == 1:
            for dyck in dyck_paths((n - 1) // 2):
                m = len(dyck) // 2
                shape = shape_of(dyck.strip_first_ascent() + Path("d"))
                for tableau in enumerate_increasing(shape, 2 * m + 1, exact_max=True):
                    v = prime_map(tableau, dyck)
                    _expect(prime_map_inverse(v, dyck) == tableau, f"prime_map(a={dyck.word!r}) 往返失败")
                    sigma = v_tableau_to_typeV_chain(v, dyck)
                    _expect(typev_chain_to_v_tableau(sigma, dyck) == v, f"V 型实现(a={dyck.word!r}) 往返失败")
                    yield f"prime:{dyck.word}"

        if n >= 2:
            for prefix in dyck_prefixes(n - 2):
                target = Path("du") + prefix
                for tableau in enumerate_increasing(shape_of(target), n, exact_max=True):
                    chain = prefix_map(tableau, prefix)
                    _expect(prefix_map_inverse(chain, prefix) == tableau, f"prefix_map(P={prefix.word!r}) 往返失败")
                    yield f"prefix:{prefix.word}"


def _low_valleys(path: Path) -> frozenset:
    profile = valley_peak_profile(path)
    return frozenset(v for v in profile.valleys if v[1] == profile.lv)


def suite_typev(max_n: int) -> Iterator[str]:
    """V(a,b) 快速计数 = 穷举；V(a,b) ≠ 0 时 a、b 的低谷相同（反向不成立，如 V(uuuddd, uududd) = 0）"""
    for m in range(0, max_n // 2 + 1):
        dycks = list(dyck_paths(m))
        for dyck in dycks:
            counts = typev_counts(dyck)
            brute = enumerate_typeV_brute(dyck)
            grouped: dict[Path, int] = {}
            for end, _ in brute:
                grouped[end] = grouped.get(end, 0) + 1
            _expect(counts == grouped, f"a={dyck.word!r}: 逐层计数与穷举不一致")
            fast = sorted(
                ((end.word, chain.words()) for end, chain in enumerate_typeV(dyck)),
            )
            _expect(
                fast == [(end.word, chain.words()) for end, chain in brute],
                f"a={dyck.word!r}: enumerate_typeV 与穷举列表不一致",
            )
            for other, count in counts.items():
                _expect(
                    count == 0 or _low_valleys(dyck) == _low_valleys(other),
                    f"V({dyck.word},{other.word}) = {count} 但低谷不同",
                )
            yield dyck.word


SUITES: dict[str, Callable[[int], Iterator[str]]] = {
    "bijections": suite_bijections,
    "f-threeway": suite_f_threeway,
    "hook": suite_hook,
    "prop2": suite_prop2,
    "prop3": suite_prop3,
    "theta": suite_theta,
    "typeV": suite_typev,
}

# 只检查了部分范围的套件：返回说明文字，全范围检查时返回 None
SUITE_COVERAGE: dict[str, Callable[[int], Optional[str]]] = {
    "prop3": _prop3_coverage,
    "theta": _theta_coverage,
}


def run_suite(name: str, max_n: int, timing: bool = True) -> SuiteResult:
    """
    运行单个套件

    Args:
        name: 套件名称
        max_n: 最大路径长度
        timing: 是否记录耗时

    Returns:
        SuiteResult: 检查的实例数、（若有）最小反例与缩减后的检查范围
    """
    started = time.perf_counter()
    instances = 0
    counterexample: Optional[str] = None
    try:
        for _ in SUITES[name](max_n):
            instances += 1
    except Mismatch as e:
        counterexample = str(e)
    except LimitExceededError:
        raise
    except (ConsistencyError, ValidationError) as e:
        counterexample = f"{type(e).__name__}: {e}"
    return SuiteResult(
        suite=name,
        instances=str(instances),
        passed=counterexample is None,
        counterexample=counterexample,
        coverage=SUITE_COVERAGE[name](max_n) if name in SUITE_COVERAGE else None,
        elapsed_seconds=time.perf_counter() - started if timing else None,
    )


def _run_suite_job(args: tuple[str, int, bool]) -> SuiteResult:
    return run_suite(*args)


def verify(
    max_n: int,
    suites: Optional[list[str]] = None,
    jobs: int = 1,
    timing: bool = True,
) -> Report:
    """
    运行验证套件

    Args:
        max_n: 最大路径长度（不超过 SHIFTED_CHAINS_MAX_N）
        suites: 套件名称列表，为空时运行全部
        jobs: 并行进程数
        timing: 是否记录耗时

    Returns:
        Report: 套件结果按名称排序；任一套件失败时 exit_code = 1

    Raises:
        LimitExceededError: max_n 超过上限
        ValidationError: 参数非法或套件名称未知
    """
    started = time.perf_counter()
    cap = get_max_n()
    is_valid, error_msg = validate_max_n(max_n, cap)
    if not is_valid:
        if isinstance(max_n, int) and max_n > cap:
            raise LimitExceededError(error_msg)
        raise ValidationError(error_msg)

    names = sorted(set(suites or SUITE_NAMES))
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ValidationError(f"未知的套件: {', '.join(unknown)}（可选: {', '.join(SUITE_NAMES)}）")
    if jobs < 1:
        raise ValidationError("jobs 必须大于 0")

    tasks = [(name, max_n, timing) for name in names]
    if jobs == 1 or len(tasks) == 1:
        results = [_run_suite_job(task) for task in tasks]
    else:
        with ProcessPoolExecutor(max_workers=jobs) as executor:
            results = list(executor.map(_run_suite_job, tasks))
    results.sort(key=lambda result: result.suite)

    passed = all(result.passed for result in results)
    report = Report(
        command="verify",
        input={"max_n": str(max_n), "suites": ",".join(names)},
        suites=results,
        status="ok" if passed else "mismatch",
        exit_code=0 if passed else 1,
    )
    if timing:
        report.elapsed_seconds = time.perf_counter() - started
    return report

"""
测试命令行入口
"""
import pytest
import json
from pathlib import Path
import sys

# 添加项目根目录到 Python 路径
sys.path.insert(0, str(Path(__file__).parent.parent))

from src.components import run_suite, verify
from src.components.verify import THETA_SAMPLES
from src.main import main
from src.utils.formulas import f_value
from src.utils.paths import parse_path
from src.utils.validator import LimitExceededError, ValidationError


SAMPLE_CHAIN = """# k = 11，自下而上
duduud
duudud
duudud
uduudd
uududu
uuuddu
uuuudu
uuuudu
uuuudu
uuuudu
uuuuud
uuuuuu
"""

SAMPLE_ROWS = [[1, 2, 6, 7, 8, 9], [6, 6, 9, 11], [8]]


@pytest.fixture(autouse=True)
def default_limits(monkeypatch):
    """清除可能影响上限的环境变量"""
    monkeypatch.delenv("SHIFTED_CHAINS_MAX_N", raising=False)
    monkeypatch.delenv("SHIFTED_CHAINS_PROP3_LIMIT", raising=False)


@pytest.fixture
def chain_file(tmp_path):
    """创建测试用的多链文件"""
    target = tmp_path / "chain.txt"
    target.write_text(SAMPLE_CHAIN, encoding="utf-8")
    return target


@pytest.fixture
def tableau_file(tmp_path):
    """创建测试用的表格文件"""
    target = tmp_path / "tableau.json"
    target.write_text(json.dumps({"rows": SAMPLE_ROWS}), encoding="utf-8")
    return target


class TestAnalyzeCommand:
    """测试 analyze 子命令"""

    def test_json(self, capsys):
        """测试 JSON 报告"""
        code = main(["analyze", "--path", "duduud", "--no-timing", "-q"])
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        assert data["command"] == "analyze"
        assert data["results"]["degree"] == "6"
        assert data["results"]["shape"] == ["6", "4", "1"]
        assert data["results"]["saturated"] == "198"
        assert data["results"]["valleys"] == ["1:-1", "3:-1", "6:0"]
        assert data["results"]["rank"] == "10"
        assert data["results"]["chain_length_to_top"] == "11"
        assert data["results"]["f"] == str(f_value(parse_path("duduud")))
        assert "elapsed_seconds" not in data

    def test_cross_check(self, capsys):
        """测试三种途径"""
        code = main(["analyze", "--path", "dudd", "--cross-check", "--no-timing", "-q"])
        assert code == 0
        results = json.loads(capsys.readouterr().out)["results"]
        assert results["f"] == results["f.bruteforce"] == results["f.tableaux"] == results["f.recursive"] == "2"
        assert results["f.trace"] == ["dyck-sum"]

    def test_multichains(self, capsys):
        """测试多链计数"""
        code = main(["analyze", "--path", "d", "--k", "2", "--mu", "1", "--no-timing", "-q"])
        assert code == 0
        results = json.loads(capsys.readouterr().out)["results"]
        assert results["multichains"] == "2"
        assert results["multichains.mu"] == "1"

    def test_csv_matches_json(self, capsys):
        """测试 CSV 与 JSON 给出相同的值"""
        main(["analyze", "--path", "duduud", "--no-timing", "-q"])
        data = json.loads(capsys.readouterr().out)
        main(["analyze", "--path", "duduud", "--no-timing", "-q", "--format", "csv"])
        lines = capsys.readouterr().out.splitlines()
        assert f"saturated,{data['results']['saturated']}" in lines
        assert f"degree,{data['results']['degree']}" in lines

    def test_reproducible(self, capsys):
        """测试 --no-timing 时输出逐字节相同"""
        main(["analyze", "--path", "duduud", "--no-timing", "-q"])
        first = capsys.readouterr().out
        main(["analyze", "--path", "duduud", "--no-timing", "-q"])
        assert capsys.readouterr().out == first

    def test_bad_path(self, capsys):
        """测试非法路径文本"""
        code = main(["analyze", "--path", "abc"])
        assert code == 2
        assert "❌" in capsys.readouterr().err

    def test_mu_without_k(self, capsys):
        """测试只给 --mu"""
        assert main(["analyze", "--path", "d", "--mu", "1", "-q"]) == 2

    def test_unknown_format(self):
        """测试 argparse 拒绝未知格式"""
        with pytest.raises(SystemExit) as e:
            main(["analyze", "--path", "d", "--format", "png"])
        assert e.value.code == 2


class TestConvertCommand:
    """测试 convert 子命令"""

    def test_chain_to_tableau(self, chain_file, capsys):
        """测试多链 → 表格"""
        code = main(["convert", "chain-to-tableau", "--input", str(chain_file), "-q"])
        assert code == 0
        assert json.loads(capsys.readouterr().out) == {"shape": [6, 4, 1], "rows": SAMPLE_ROWS}

    def test_tableau_to_chain(self, tableau_file, capsys):
        """测试表格 → 多链"""
        code = main(["convert", "tableau-to-chain", "--input", str(tableau_file), "--k", "11", "-q"])
        assert code == 0
        expected = [line for line in SAMPLE_CHAIN.splitlines() if not line.startswith("#")]
        assert capsys.readouterr().out.splitlines() == expected

    def test_report(self, chain_file, capsys):
        """测试报告中的分类"""
        code = main([
            "convert", "chain-to-tableau", "--input", str(chain_file),
            "--format", "json", "--no-timing", "-q",
        ])
        assert code == 0
        results = json.loads(capsys.readouterr().out)["results"]
        assert results["tableau.class"] == "weak"
        assert results["chain.is_chain"] is False
        assert results["chain.small_intervals"] is True
        assert results["bottom_repeats"] == "1"

    def test_small_tableau(self, tmp_path, capsys):
        """测试单格表格"""
        target = tmp_path / "one.json"
        target.write_text('{"rows": [[1]]}', encoding="utf-8")
        assert main(["convert", "tableau-to-chain", "--input", str(target), "--k", "2", "-q"]) == 0
        assert capsys.readouterr().out == "d\nd\nu\n"

    def test_entry_too_large(self, tmp_path, capsys):
        """测试 max(T) > k"""
        target = tmp_path / "big.json"
        target.write_text('{"rows": [[2]]}', encoding="utf-8")
        assert main(["convert", "tableau-to-chain", "--input", str(target), "--k", "1", "-q"]) == 2

    def test_missing_k(self, tableau_file):
        """测试缺少 --k"""
        assert main(["convert", "tableau-to-chain", "--input", str(tableau_file), "-q"]) == 2

    def test_output_file(self, chain_file, tmp_path):
        """测试写入文件"""
        out = tmp_path / "out" / "t.json"
        assert main(["convert", "chain-to-tableau", "--input", str(chain_file), "--out", str(out), "-q"]) == 0
        assert json.loads(out.read_text(encoding="utf-8"))["rows"] == SAMPLE_ROWS


class TestVerifyCommand:
    """测试 verify 子命令"""

    def test_all_suites(self, capsys):
        """测试全部套件在小规模下通过"""
        code = main(["verify", "--max-n", "3", "--no-timing", "-q"])
        assert code == 0
        data = json.loads(capsys.readouterr().out)
        names = [suite["suite"] for suite in data["suites"]]
        assert names == sorted(names)
        assert len(names) == 7
        assert all(suite["passed"] for suite in data["suites"])

    def test_over_cap(self, capsys):
        """测试超出规模上限"""
        code = main(["verify", "--max-n", "99", "-q"])
        assert code == 2
        assert "SHIFTED_CHAINS_MAX_N" in capsys.readouterr().err

    def test_cap_from_environment(self, monkeypatch):
        """测试通过环境变量放宽上限"""
        monkeypatch.setenv("SHIFTED_CHAINS_MAX_N", "2")
        with pytest.raises(LimitExceededError):
            verify(3, ["hook"])
        assert verify(2, ["hook"], timing=False).exit_code == 0

    def test_unknown_suite(self):
        """测试未知套件"""
        with pytest.raises(ValidationError):
            verify(3, ["nope"])

    def test_parallel_matches_serial(self):
        """测试多进程与单进程结果相同"""
        serial = verify(3, ["hook", "prop2", "typeV"], jobs=1, timing=False)
        parallel = verify(3, ["hook", "prop2", "typeV"], jobs=2, timing=False)
        assert serial == parallel

    def test_run_suite(self):
        """测试单个套件"""
        result = run_suite("f-threeway", 4, timing=False)
        assert result.passed
        assert result.instances == str(2 + 4 + 8 + 16)
        assert result.counterexample is None
        assert result.coverage is None

    def test_typev_suite(self, capsys):
        """测试 typeV 套件在 n ≤ 6 时通过（含 V = 0 而低谷相同的情形）"""
        assert run_suite("typeV", 6, timing=False).passed
        code = main(["verify", "--max-n", "6", "--suite", "typeV", "--no-timing", "-q"])
        assert code == 0
        assert json.loads(capsys.readouterr().out)["suites"][0]["passed"] is True

    def test_theta_small_range_is_exhaustive(self):
        """测试 θ 套件在 n ≤ 4 时不带范围说明"""
        result = run_suite("theta", 3, timing=False)
        assert result.passed
        assert result.coverage is None

    def test_theta_samples_longer_paths(self):
        """测试 θ 套件在 n = 5 时抽样并报告检查范围"""
        result = run_suite("theta", 5, timing=False)
        assert result.passed
        assert "抽样" in result.coverage
        assert int(result.instances) > 16 * 7 * THETA_SAMPLES

    def test_coverage_in_report(self, monkeypatch, capsys):
        """测试范围说明出现在 CSV 报告中"""
        monkeypatch.setenv("SHIFTED_CHAINS_PROP3_LIMIT", "4")
        code = main(["verify", "--max-n", "5", "--suite", "prop3", "--no-timing", "-q", "--format", "csv"])
        assert code == 0
        lines = capsys.readouterr().out.splitlines()
        assert "prop3.coverage,|duP| ≤ 4（SHIFTED_CHAINS_PROP3_LIMIT）" in lines


class TestFigureCommand:
    """测试 figure 子命令"""

    def test_tikz_to_stdout(self, capsys):
        """测试 TikZ 输出到标准输出"""
        assert main(["figure", "--path", "ud", "--format", "tikz", "--out", "-", "-q"]) == 0
        out = capsys.readouterr().out
        assert out.startswith("\\documentclass[tikz]{standalone}")
        assert out.endswith("\\end{document}\n")

    def test_svg_file_reproducible(self, tmp_path):
        """测试 SVG 文件可逐字节复现"""
        first, second = tmp_path / "a.svg", tmp_path / "b.svg"
        assert main(["figure", "--path", "duduud", "--out", str(first), "-q"]) == 0
        assert main(["figure", "--path", "duduud", "--out", str(second), "-q"]) == 0
        assert first.read_bytes() == second.read_bytes()

    def test_tableau_figure(self, tableau_file, tmp_path):
        """测试表格图形"""
        out = tmp_path / "t.tex"
        assert main(["figure", "--tableau", str(tableau_file), "--format", "tikz", "--out", str(out), "-q"]) == 0
        assert "{11}" in out.read_text(encoding="utf-8")

    def test_requires_source(self):
        """测试必须给出一种输入"""
        with pytest.raises(SystemExit) as e:
            main(["figure", "--format", "svg"])
        assert e.value.code == 2


if __name__ == '__main__':
    pytest.main([__file__, '-v'])

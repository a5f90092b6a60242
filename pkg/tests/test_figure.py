"""
测试图形模块
"""
import pytest
from pathlib import Path as FilePath
import sys

# 添加项目根目录到 Python 路径
sys.path.insert(0, str(FilePath(__file__).parent.parent))

from src.components.figure import (
    multichain_scene,
    path_scene,
    render_figure,
    tableau_scene,
)
from src.config import CHAIN_COLORS, GRID_COLOR, PATH_COLOR
from src.utils.lattice import Multichain
from src.utils.paths import Path
from src.utils.tableaux import Shape, ShiftedTableau
from src.utils.validator import PreconditionError, ValidationError

GOLDEN_DIR = FilePath(__file__).parent / "golden"


def read_golden(name: str) -> str:
    return (GOLDEN_DIR / name).read_text(encoding="utf-8")


class TestScenes:
    """测试图形描述"""

    def test_path_scene(self):
        """测试单条路径"""
        scene = path_scene(Path("ud"))
        assert scene.width == 2
        assert (scene.y_min, scene.y_max) == (0, 1)
        assert scene.dots == [(0, 0), (1, 1), (2, 0)]
        assert scene.lines == [(PATH_COLOR, [(0, 0), (1, 1), (2, 0)])]

    def test_tableau_scene(self):
        """测试表格的格子与标签"""
        tableau = ShiftedTableau.from_rows([[1, 2, 6, 7, 8, 9], [6, 6, 9, 11], [8]])
        scene = tableau_scene(tableau)
        assert len(scene.cells) == 11
        assert sorted(label for _, _, label in scene.labels) == sorted(
            str(value) for _, value in tableau.entries()
        )
        assert [color for color, _ in scene.lines] == [GRID_COLOR, PATH_COLOR]

    def test_empty_tableau(self):
        """测试空表格"""
        with pytest.raises(PreconditionError):
            tableau_scene(ShiftedTableau(Shape(()), ()))

    def test_multichain_colors(self):
        """测试多链自下而上依次着色"""
        chain = Multichain.from_words(["dd", "du", "ud", "uu"])
        scene = multichain_scene(chain)
        assert [color for color, _ in scene.lines] == CHAIN_COLORS[:4]
        assert (scene.y_min, scene.y_max) == (-2, 2)


class TestTikz:
    """测试 TikZ 输出"""

    def test_path_golden(self):
        """测试路径 ud 的 TikZ 文档"""
        assert render_figure(Path("ud"), "tikz") == read_golden("path_ud.tikz")

    def test_tableau_golden(self):
        """测试单格表格的 TikZ 文档"""
        assert render_figure(ShiftedTableau.from_rows([[1]]), "tikz") == read_golden("tableau_1.tikz")

    def test_multichain_defines_colors(self):
        """测试多链的颜色定义"""
        text = render_figure(Multichain.from_words(["d", "d", "u"]), "tikz")
        assert text.count("\\definecolor") == 3
        assert text.count("\\draw[very thick") == 3


class TestSvg:
    """测试 SVG 输出"""

    def test_reproducible(self):
        """测试两次渲染逐字节相同"""
        tableau = ShiftedTableau.from_rows([[1, 2, 3], [3]])
        assert render_figure(tableau, "svg") == render_figure(tableau, "svg")

    def test_document(self):
        """测试 SVG 文档结构"""
        text = render_figure(Path("duduud"), "svg")
        assert "<svg" in text
        assert text.rstrip().endswith("</svg>")

    def test_labels_kept_as_text(self):
        """测试标签以文本形式保留"""
        text = render_figure(ShiftedTableau.from_rows([[1, 2, 3], [3]]), "svg")
        assert ">3<" in text

    def test_unknown_format(self):
        """测试未知格式"""
        with pytest.raises(ValidationError):
            render_figure(Path("ud"), "png")


if __name__ == '__main__':
    pytest.main([__file__, '-v'])

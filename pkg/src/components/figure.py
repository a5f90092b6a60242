"""
figure 命令 - 路径、移位表格与多链的 SVG / TikZ 图形

图形先组装成与输出格式无关的 Scene（格点、折线、格子多边形、标签），
再分别渲染为 SVG（matplotlib）或独立可编译的 TikZ 文档。
格子 (i,j) 画成以格点 (n+i−j, n−i−j) 为下顶点的菱形，
最后一列（x = n）的格子只有左半边。
"""
from dataclasses import dataclass, field
from io import StringIO
from typing import Union

import matplotlib
from matplotlib.figure import Figure
from matplotlib.patches import Polygon

from ..config import (
    CHAIN_COLORS,
    FIGURE_DPI,
    FIGURE_FORMATS,
    FIGURE_UNIT,
    GRID_COLOR,
    LABEL_FONT_SIZE,
    PATH_COLOR,
    SVG_HASH_SALT,
)
from ..utils.lattice import Multichain
from ..utils.paths import Path, top_path
from ..utils.tableaux import ShiftedTableau, cell_point, path_of_shape
from ..utils.validator import PreconditionError, ValidationError

Point = tuple[float, float]


@dataclass
class Scene:
    """与输出格式无关的图形描述"""
    width: int
    y_min: int
    y_max: int
    dots: list[Point] = field(default_factory=list)
    lines: list[tuple[str, list[Point]]] = field(default_factory=list)
    cells: list[list[Point]] = field(default_factory=list)
    labels: list[tuple[float, float, str]] = field(default_factory=list)


def _grid(width: int, y_min: int, y_max: int) -> list[Point]:
    # 从原点可达的格点：|y| ≤ x 且 x ≡ y (mod 2)
    return [
        (x, y)
        for x in range(width + 1)
        for y in range(y_min, y_max + 1)
        if abs(y) <= x and (x + y) % 2 == 0
    ]


def _polyline(path: Path) -> list[Point]:
    return [(x, y) for x, y in enumerate(path.points)]


def path_scene(path: Path) -> Scene:
    """单条路径"""
    y_min, y_max = min(path.points), max(path.points)
    return Scene(
        width=len(path),
        y_min=y_min,
        y_max=y_max,
        dots=_grid(len(path), y_min, y_max),
        lines=[(PATH_COLOR, _polyline(path))],
    )


def tableau_scene(tableau: ShiftedTableau) -> Scene:
    """
    移位表格：底路径 path_of_shape(λ)、顶路径 u^n 以及带元素的格子

    Raises:
        PreconditionError: 空表格
    """
    if len(tableau.shape) == 0:
        raise PreconditionError("figure", "空表格没有可画的格子")
    base = path_of_shape(tableau.shape)
    n = len(base)
    y_min = min(base.points)
    scene = Scene(
        width=n,
        y_min=y_min,
        y_max=n,
        dots=_grid(n, y_min, n),
        lines=[(GRID_COLOR, _polyline(top_path(n))), (PATH_COLOR, _polyline(base))],
    )
    for (i, j), value in tableau.entries():
        x, y = cell_point(n, i, j)
        if x == n:
            scene.cells.append([(x - 1, y + 1), (x, y), (x, y + 2)])
            scene.labels.append((x - 0.35, y + 1, str(value)))
        else:
            scene.cells.append([(x - 1, y + 1), (x, y), (x + 1, y + 1), (x, y + 2)])
            scene.labels.append((x, y + 1, str(value)))
    return scene


def multichain_scene(chain: Multichain) -> Scene:
    """多链：自下而上依次使用 CHAIN_COLORS 中的颜色"""
    y_min = min(min(path.points) for path in chain.paths)
    y_max = max(max(path.points) for path in chain.paths)
    scene = Scene(
        width=chain.base_length,
        y_min=y_min,
        y_max=y_max,
        dots=_grid(chain.base_length, y_min, y_max),
    )
    for index, path in enumerate(chain.paths):
        scene.lines.append((CHAIN_COLORS[index % len(CHAIN_COLORS)], _polyline(path)))
    return scene


# ==================== 渲染 ====================

def render_svg(scene: Scene) -> str:
    """用 matplotlib 渲染为 SVG（固定 hashsalt、不写日期，输出可逐字节复现）"""
    width = scene.width + 1
    height = scene.y_max - scene.y_min + 1
    fig = Figure(figsize=(width * FIGURE_UNIT, height * FIGURE_UNIT), dpi=FIGURE_DPI)
    ax = fig.add_axes((0, 0, 1, 1))
    ax.set_axis_off()
    ax.set_xlim(-0.5, scene.width + 0.5)
    ax.set_ylim(scene.y_min - 0.5, scene.y_max + 0.5)
    ax.set_aspect("equal")

    for corners in scene.cells:
        ax.add_patch(Polygon(corners, closed=True, fill=False, edgecolor=GRID_COLOR, linewidth=0.6))
    if scene.dots:
        xs, ys = zip(*scene.dots)
        ax.plot(xs, ys, linestyle="none", marker="o", markersize=1.5, color=GRID_COLOR)
    for color, points in scene.lines:
        xs, ys = zip(*points)
        ax.plot(xs, ys, color=color, linewidth=2, solid_joinstyle="round")
    for x, y, text in scene.labels:
        ax.text(x, y, text, ha="center", va="center", fontsize=LABEL_FONT_SIZE)

    buffer = StringIO()
    with matplotlib.rc_context({"svg.hashsalt": SVG_HASH_SALT, "svg.fonttype": "none"}):
        fig.savefig(buffer, format="svg", metadata={"Date": None})
    return buffer.getvalue()


def _number(value: float) -> str:
    return f"{value:g}"


def _coordinate(point: Point) -> str:
    return f"({_number(point[0])},{_number(point[1])})"


def render_tikz(scene: Scene) -> str:
    """渲染为独立可编译的 TikZ 文档"""
    colors = []
    for color, _ in scene.lines:
        if color not in colors:
            colors.append(color)
    names = {color: f"c{index}" for index, color in enumerate(colors)}

    lines = ["\\documentclass[tikz]{standalone}"]
    for color in colors:
        lines.append(f"\\definecolor{{{names[color]}}}{{HTML}}{{{color.lstrip('#').upper()}}}")
    lines.append("\\begin{document}")
    lines.append("\\begin{tikzpicture}[scale=0.5]")
    for point in scene.dots:
        lines.append(f"\\fill[gray] {_coordinate(point)} circle (1pt);")
    for corners in scene.cells:
        lines.append("\\draw[gray] " + " -- ".join(_coordinate(p) for p in corners) + " -- cycle;")
    for color, points in scene.lines:
        lines.append(f"\\draw[very thick, {names[color]}] " + " -- ".join(_coordinate(p) for p in points) + ";")
    for x, y, text in scene.labels:
        lines.append(f"\\node[font=\\scriptsize] at {_coordinate((x, y))} {{{text}}};")
    lines.append("\\end{tikzpicture}")
    lines.append("\\end{document}")
    return "\n".join(lines) + "\n"


def render_figure(obj: Union[Path, ShiftedTableau, Multichain], fmt: str) -> str:
    """
    渲染路径、表格或多链

    Args:
        obj: 要渲染的对象
        fmt: svg 或 tikz

    Returns:
        str: 图形文本

    Raises:
        ValidationError: 未知格式
    """
    if fmt not in FIGURE_FORMATS:
        raise ValidationError(f"未知的图形格式: {fmt}（可选: {', '.join(FIGURE_FORMATS)}）")
    if isinstance(obj, Path):
        scene = path_scene(obj)
    elif isinstance(obj, ShiftedTableau):
        scene = tableau_scene(obj)
    else:
        scene = multichain_scene(obj)
    return render_svg(scene) if fmt == "svg" else render_tikz(scene)

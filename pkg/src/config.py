"""
shifted-chains - 全局配置文件
"""
import os
from pathlib import Path

from dotenv import load_dotenv

# 加载 .env（如果存在）
load_dotenv()

# 版本号
VERSION = "0.3.0"

# 项目根目录
BASE_DIR = Path(__file__).parent.parent

# 默认输出目录（figure 命令未指定 --out 时使用）
OUTPUT_DIR = BASE_DIR / "output"

# 输出文本编码
OUTPUT_ENCODING = "utf-8"

# 穷举验证的规模上限（可被环境变量覆盖）
MAX_N_ENV = "SHIFTED_CHAINS_MAX_N"
DEFAULT_MAX_N = 12

# Dyck 前缀求和（逐项展开）允许的最大 |duP|
PROP3_LIMIT_ENV = "SHIFTED_CHAINS_PROP3_LIMIT"
PROP3_MAX_LENGTH = 12

# 退出码
EXIT_OK = 0
EXIT_MISMATCH = 1
EXIT_USAGE = 2

# 报告输出格式
REPORT_FORMATS = ["json", "table", "csv"]

# 图形输出格式
FIGURE_FORMATS = ["svg", "tikz"]

# 验证套件名称（输出顺序按名称排序）
SUITE_NAMES = [
    "bijections",
    "f-threeway",
    "hook",
    "prop2",
    "prop3",
    "theta",
    "typeV",
]

# 图形样式
FIGURE_UNIT = 0.5          # 每个格子的边长（英寸）
FIGURE_DPI = 72
PATH_COLOR = "#1f4e9c"     # 路径主色（蓝）
GRID_COLOR = "#9a9a9a"
LABEL_FONT_SIZE = 8
SVG_HASH_SALT = "shifted-chains"

# 多链图中依次使用的颜色
CHAIN_COLORS = [
    "#1f4e9c",
    "#c0392b",
    "#27ae60",
    "#16a0b5",
    "#b5169a",
    "#d4ac0d",
    "#000000",
]


def _read_positive_int(name: str, default: int) -> int:
    """从环境变量读取正整数，缺失或非法时返回默认值"""
    raw = os.getenv(name, "").strip()
    if not raw:
        return default
    try:
        value = int(raw)
    except ValueError:
        return default
    return value if value > 0 else default


def get_max_n() -> int:
    """
    获取穷举验证的规模上限

    Returns:
        int: SHIFTED_CHAINS_MAX_N 的值，默认 12
    """
    return _read_positive_int(MAX_N_ENV, DEFAULT_MAX_N)


def get_prop3_limit() -> int:
    """
    获取 Dyck 前缀求和的长度上限

    Returns:
        int: SHIFTED_CHAINS_PROP3_LIMIT 的值，默认 12
    """
    return _read_positive_int(PROP3_LIMIT_ENV, PROP3_MAX_LENGTH)

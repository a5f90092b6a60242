"""
命令组件包
"""
from .analyze import analyze_path
from .convert import Conversion, convert
from .verify import run_suite, verify
from .figure import render_figure

__all__ = [
    'analyze_path',
    'Conversion',
    'convert',
    'run_suite',
    'verify',
    'render_figure'
]

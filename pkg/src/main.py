#!/usr/bin/env python
"""
shifted-chains - 命令行入口

二元路径格、移位表格与多链计数的命令行工具。

子命令:
- analyze  分析一条路径：高度、谷/峰、度数、形状、f(P)、饱和链个数
- convert  多链 ↔ 移位表格（θ / θ⁻¹），同时给出两侧的分类
- verify   在穷举范围内比对快速算法、双射与穷举参照
- figure   输出路径、表格或多链的 SVG / TikZ 图形

使用方法:
    python -m src.main analyze --path duduud
    python -m src.main convert chain-to-tableau --input chain.txt
    python -m src.main verify --max-n 8 --suite f-threeway
    python -m src.main figure --path duduud --format tikz
"""
import argparse
import sys
from pathlib import Path as FilePath
from typing import Optional

# 添加项目根目录到 Python 路径
sys.path.insert(0, str(FilePath(__file__).parent.parent))

from src.config import (
    EXIT_MISMATCH,
    EXIT_USAGE,
    FIGURE_FORMATS,
    OUTPUT_DIR,
    REPORT_FORMATS,
    SUITE_NAMES,
    VERSION,
    get_max_n,
)
from src.components import analyze_path, convert, render_figure, verify
from src.components.convert import DIRECTIONS
from src.utils.exporter import render_report, write_output
from src.utils.importer import load_multichain, load_tableau
from src.utils.paths import parse_path
from src.utils.validator import ConsistencyError, ValidationError, sanitize_word

DEFAULT_VERIFY_MAX_N = 8


def status(args: argparse.Namespace, message: str = "") -> None:
    """状态信息写到标准错误（--quiet 时不输出）"""
    if not args.quiet:
        print(message, file=sys.stderr)


def banner(args: argparse.Namespace, title: str) -> None:
    status(args, "=" * 50)
    status(args, title)
    status(args, "=" * 50)


def cmd_analyze(args: argparse.Namespace) -> int:
    banner(args, f"🔍 分析路径 {args.path}")
    report = analyze_path(
        args.path,
        k=args.k,
        mu=args.mu,
        cross_check=args.cross_check,
        timing=not args.no_timing,
    )
    written = write_output(render_report(report, args.format), args.out)
    if written:
        status(args, f"📄 已写入 {written}")
    if report.exit_code:
        status(args, "❌ 三种途径计算的 f(P) 不一致")
    else:
        status(args, "✅ 完成")
    return report.exit_code


def cmd_convert(args: argparse.Namespace) -> int:
    banner(args, f"🔄 转换 {args.direction}")
    conversion = convert(args.direction, args.input, k=args.k, timing=not args.no_timing)
    results = conversion.report.results
    status(args, f"   表格类别: {results['tableau.class']}，max(T) = {results['tableau.max']}")
    status(
        args,
        f"   多链: 链={results['chain.is_chain']}，小区间={results['chain.small_intervals']}，"
        f"饱和={results['chain.is_saturated']}",
    )
    if args.format == "payload":
        text = conversion.payload
    else:
        text = render_report(conversion.report, args.format)
    written = write_output(text, args.out)
    if written:
        status(args, f"📄 已写入 {written}")
    status(args, "✅ 完成")
    return conversion.report.exit_code


def cmd_verify(args: argparse.Namespace) -> int:
    banner(args, f"🧪 穷举验证（max-n = {args.max_n}）")
    report = verify(args.max_n, args.suite, jobs=args.jobs, timing=not args.no_timing)
    for result in report.suites:
        if result.passed:
            status(args, f"   ✅ {result.suite}: {result.instances} 个实例")
        else:
            status(args, f"   ❌ {result.suite}: {result.counterexample}")
    written = write_output(render_report(report, args.format), args.out)
    if written:
        status(args, f"📄 已写入 {written}")
    if report.exit_code:
        status(args, "⚠️ 存在不一致")
    return report.exit_code


def cmd_figure(args: argparse.Namespace) -> int:
    if args.path is not None:
        obj = parse_path(sanitize_word(args.path))
        stem = f"path-{obj.word or 'empty'}"
    elif args.tableau is not None:
        obj = load_tableau(args.tableau)
        stem = "tableau"
    else:
        obj = load_multichain(args.multichain)
        stem = "multichain"

    banner(args, f"🎨 生成图形 ({args.format})")
    text = render_figure(obj, args.format)
    out = args.out
    if out is None:
        out = str(OUTPUT_DIR / f"{stem}.{args.format}")
    written = write_output(text, None if out == "-" else out)
    if written:
        status(args, f"📄 已写入 {written}")
    status(args, "✅ 完成")
    return 0


def build_parser() -> argparse.ArgumentParser:
    """构建参数解析器"""
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--quiet', '-q', action='store_true', help='不输出状态信息')
    common.add_argument('--out', '-o', type=str, default=None, help='输出文件（默认标准输出）')
    common.add_argument('--no-timing', action='store_true', help='报告中不记录耗时（输出可逐字节复现）')

    parser = argparse.ArgumentParser(
        description='shifted-chains 二元路径格与移位表格工具',
        formatter_class=argparse.RawDescriptionHelpFormatter,
        epilog="""
示例:
    python -m src.main analyze --path duduud                 # 度数、形状、f(P)、饱和链个数
    python -m src.main analyze --path dudd --cross-check     # 三种途径计算 f(P)
    python -m src.main analyze --path dd --k 3 --mu 1        # 多链计数
    python -m src.main convert chain-to-tableau --input chain.txt
    python -m src.main convert tableau-to-chain --input t.json --k 11
    python -m src.main verify --max-n 6 --suite theta        # 运行指定套件
    python -m src.main figure --path duduud --format tikz --out -
        """
    )
    parser.add_argument('--version', action='version', version=f'%(prog)s {VERSION}')
    subparsers = parser.add_subparsers(dest='command', required=True)

    analyze = subparsers.add_parser('analyze', parents=[common], help='分析一条路径')
    analyze.add_argument('--path', '-p', type=str, required=True, help='路径文本，如 duduud')
    analyze.add_argument('--k', type=int, default=None, help='多链长度')
    analyze.add_argument('--mu', type=int, default=None, help='底端重复次数 μ（需同时给出 --k）')
    analyze.add_argument('--cross-check', action='store_true', help='用三种途径分别计算 f(P)')
    analyze.add_argument('--format', '-f', choices=REPORT_FORMATS, default='json', help='输出格式（默认: json）')
    analyze.set_defaults(handler=cmd_analyze)

    conv = subparsers.add_parser('convert', parents=[common], help='多链与移位表格互相转换')
    conv.add_argument('direction', choices=DIRECTIONS, help='转换方向')
    conv.add_argument('--input', '-i', type=str, default='-', help='输入文件，- 表示标准输入（默认）')
    conv.add_argument('--k', type=int, default=None, help='多链长度（tableau-to-chain 必需）')
    conv.add_argument(
        '--format', '-f',
        choices=['payload'] + REPORT_FORMATS,
        default='payload',
        help='payload 输出转换后的对象（默认），其余输出报告'
    )
    conv.set_defaults(handler=cmd_convert)

    ver = subparsers.add_parser('verify', parents=[common], help='穷举验证')
    ver.add_argument(
        '--max-n', type=int, default=min(DEFAULT_VERIFY_MAX_N, get_max_n()),
        help=f'最大路径长度（默认: {DEFAULT_VERIFY_MAX_N}，上限由 SHIFTED_CHAINS_MAX_N 决定）'
    )
    ver.add_argument('--suite', '-s', action='append', choices=SUITE_NAMES, default=None, help='套件名称，可重复（默认全部）')
    ver.add_argument('--jobs', '-j', type=int, default=1, help='并行进程数（默认: 1）')
    ver.add_argument('--format', '-f', choices=REPORT_FORMATS, default='json', help='输出格式（默认: json）')
    ver.set_defaults(handler=cmd_verify)

    fig = subparsers.add_parser('figure', parents=[common], help='输出 SVG / TikZ 图形')
    source = fig.add_mutually_exclusive_group(required=True)
    source.add_argument('--path', '-p', type=str, help='路径文本')
    source.add_argument('--tableau', type=str, help='表格 JSON 文件，- 表示标准输入')
    source.add_argument('--multichain', type=str, help='多链文本文件，- 表示标准输入')
    fig.add_argument('--format', '-f', choices=FIGURE_FORMATS, default='svg', help='图形格式（默认: svg）')
    fig.set_defaults(handler=cmd_figure)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    """主函数"""
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.handler(args)
    except ValidationError as e:
        print(f"❌ {e}", file=sys.stderr)
        return EXIT_USAGE
    except ConsistencyError as e:
        print(f"❌ 内部一致性检查失败: {e}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())

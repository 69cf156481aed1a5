"""
命令行入口

    singgraph check FILE [FILE ...]
    singgraph report FILE [FILE ...] [--tower] [--format json|text]
    singgraph configs FILE
    singgraph blowdown FILE [--tower]
    singgraph dot FILE
    singgraph gen chain|cyclic|catalog|random ... [-o FILE]
    singgraph schema

退出码：0 成功，1 I/O 错误，2 输入被拒绝，3 内部不变量被破坏
"""
import argparse
import logging
import sys
from typing import List, Optional

from dotenv import load_dotenv

# 在读取设置之前加载 .env
load_dotenv()

from singgraph.core.config import settings  # noqa: E402
from singgraph.commands.generate import run_gen  # noqa: E402
from singgraph.commands.graphs import (  # noqa: E402
    run_blowdown,
    run_check,
    run_configs,
    run_dot,
    run_report,
    run_schema,
)

VERSION = settings.VERSION

logger = logging.getLogger(__name__)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="singgraph",
        description="有理曲面奇点对偶图的形变不变量",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {VERSION}")
    parser.add_argument("--log-level", default=None, help=f"日志级别，默认 {settings.LOG_LEVEL}")
    subparsers = parser.add_subparsers(dest="command", required=True)

    check = subparsers.add_parser("check", help="校验图文件：负定、有理、几乎约化")
    check.add_argument("files", nargs="+", metavar="FILE")
    check.set_defaults(handler=run_check)

    report = subparsers.add_parser("report", help="输出完整的不变量报告")
    report.add_argument("files", nargs="+", metavar="FILE")
    report.add_argument("--tower", action="store_true", help="同时计算 blowdown 塔")
    report.add_argument("--format", choices=["json", "text"], default=None)
    report.set_defaults(handler=run_report)

    configs = subparsers.add_parser("configs", help="列出 RDP 配置及其分类")
    configs.add_argument("file", metavar="FILE")
    configs.set_defaults(handler=run_configs)

    blowdown = subparsers.add_parser("blowdown", help="Tjurina 收缩")
    blowdown.add_argument("file", metavar="FILE")
    blowdown.add_argument("--tower", action="store_true", help="递归到所有 fiber 为 RDP 或光滑点")
    blowdown.set_defaults(handler=run_blowdown)

    dot = subparsers.add_parser("dot", help="输出 DOT 图")
    dot.add_argument("file", metavar="FILE")
    dot.set_defaults(handler=run_dot)

    schema = subparsers.add_parser("schema", help="输出报告的 JSON Schema")
    schema.set_defaults(handler=run_schema)

    gen = subparsers.add_parser("gen", help="生成图文件")
    gen_kinds = gen.add_subparsers(dest="kind", required=True)

    chain = gen_kinds.add_parser("chain", help="自交数依次为 W1 W2 ... 的链")
    chain.add_argument("weights", nargs="+", type=int, metavar="W")

    cyclic = gen_kinds.add_parser("cyclic", help="循环商奇点 1/N(1, Q)")
    cyclic.add_argument("n", type=int, metavar="N")
    cyclic.add_argument("q", type=int, metavar="Q")

    catalog = gen_kinds.add_parser("catalog", help="目录中某一类配置的实例")
    catalog.add_argument("cls", metavar="CLASS")
    catalog.add_argument("--q", type=int, default=None)
    catalog.add_argument("--m", type=int, default=None)
    catalog.add_argument("--k", type=int, default=None)
    catalog.add_argument("--name", default=None, help="ZeroConfig 的 ADE 型，如 D4")
    catalog.add_argument("--weights", default="", help="连出叶子的自交数，如 --weights=-3,-3")

    random_tree = gen_kinds.add_parser("random", help="随机负定树")
    random_tree.add_argument("--vertices", type=int, default=8, help="顶点数上限")
    random_tree.add_argument("--seed", type=int, default=None, help=f"随机种子，默认 {settings.SEED}")

    for sub in (chain, cyclic, catalog, random_tree):
        sub.add_argument("-o", "--output", default=None, metavar="FILE")
    gen.set_defaults(handler=run_gen)
    return parser


def main(argv: Optional[List[str]] = None, write=None) -> int:
    args = build_parser().parse_args(argv)
    logging.basicConfig(
        level=(args.log_level or settings.LOG_LEVEL).upper(),
        format="%(asctime)s - %(name)s - %(levelname)s - %(message)s",
        stream=sys.stderr,
    )
    out = write or sys.stdout.write
    logger.info(f"singgraph {VERSION}: {args.command}")
    return args.handler(args, out)


def run() -> None:
    sys.exit(main())


if __name__ == "__main__":
    run()

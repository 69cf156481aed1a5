"""
gen 子命令：chain / cyclic / catalog / random
"""
import logging
import random
from pathlib import Path

from singgraph.core.config import settings
from singgraph.core.errors import InvalidParameters, SinggraphError, UnknownClass
from singgraph.schemas.configuration import TAG_SYMBOLS, ConfigClass, ConfigTag
from singgraph.services.generator_service import generator_service
from singgraph.services.graph_service import graph_service
from singgraph.commands.graphs import EXIT_OK, failure_status

logger = logging.getLogger(__name__)

CLASS_NAMES = {symbol: tag for tag, symbol in TAG_SYMBOLS.items()}
CLASS_NAMES.update({tag.value: tag for tag in ConfigTag})


def parse_class(args) -> ConfigClass:
    """
    由命令行参数构造 ConfigClass，类名可以是 3-A 这样的符号，也可以是 ThreeA 这样的标签名

    Raises:
        UnknownClass: 类名不在目录中
    """
    tag = CLASS_NAMES.get(args.cls)
    if tag is None:
        raise UnknownClass(f"未知的配置类 {args.cls!r}，可选: {', '.join(TAG_SYMBOLS.values())}")
    return ConfigClass(tag=tag, q=args.q, m=args.m, k=args.k, ade=args.name)


def parse_weights(text: str):
    if not text:
        return []
    try:
        return [int(part) for part in text.split(",")]
    except ValueError:
        raise InvalidParameters(f"无法解析权重列表 {text!r}")


def _emit(g, args, write) -> int:
    text = graph_service.serialize_graph(g)
    if args.output:
        Path(args.output).write_text(text, encoding="utf-8")
        logger.info(f"已写入 {args.output}")
    else:
        write(text)
    return EXIT_OK


def run_gen(args, write) -> int:
    try:
        if args.kind == "chain":
            g = generator_service.gen_chain(args.weights)
        elif args.kind == "cyclic":
            g = generator_service.gen_cyclic(args.n, args.q)
        elif args.kind == "catalog":
            g = generator_service.gen_catalog(parse_class(args), parse_weights(args.weights))
        else:
            seed = args.seed if args.seed is not None else settings.SEED
            g = generator_service.random_tree(random.Random(seed), max_vertices=args.vertices)
        return _emit(g, args, write)
    except (SinggraphError, OSError) as e:
        return failure_status(e)

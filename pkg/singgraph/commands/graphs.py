"""
读取图文件的命令：check / report / configs / blowdown / dot / schema
"""
import json
import logging
from importlib import resources
from pathlib import Path
from typing import Callable, List, Sequence, Tuple

from singgraph.core.config import settings
from singgraph.core.errors import DomainError, InternalInvariantViolation, SinggraphError
from singgraph.schemas.graph import DualGraph
from singgraph.schemas.report import CheckResult
from singgraph.services.blowdown_service import blowdown_service
from singgraph.services.configuration_service import configuration_service
from singgraph.services.cycle_service import cycle_service
from singgraph.services.graph_service import graph_service
from singgraph.services.render_service import render_service
from singgraph.services.report_service import report_service

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_IO = 1
EXIT_DOMAIN = 2
EXIT_INTERNAL = 3


def load_graph(path: str) -> Tuple[DualGraph, bytes]:
    """读取并解析图文件，I/O 错误原样抛出（OSError）"""
    data = Path(path).read_bytes()
    return graph_service.parse_graph(data), data


def failure_status(error: Exception) -> int:
    if isinstance(error, InternalInvariantViolation):
        logger.error(f"内部不变量被破坏: {error}", exc_info=error)
        return EXIT_INTERNAL
    if isinstance(error, SinggraphError):
        logger.warning(f"输入被拒绝: {error}")
        return error.exit_status
    logger.warning(f"读取文件失败: {error}")
    return EXIT_IO


def _run_many(paths: Sequence[str], task: Callable[[str], Tuple[int, str]], write) -> int:
    """按参数顺序逐个处理文件，退出码取最大值"""
    worst = EXIT_OK
    for path in paths:
        status, text = task(path)
        if text:
            write(text)
        worst = max(worst, status)
    return worst


def check_one(path: str) -> Tuple[int, str]:
    try:
        g, _ = load_graph(path)
        report_service.check_graph(g)
    except (SinggraphError, OSError) as e:
        status = failure_status(e)
        result = CheckResult(
            file=path,
            status="rejected" if isinstance(e, DomainError) else "error",
            diagnostic=e.code if isinstance(e, SinggraphError) else "io_error",
            message=str(e),
        )
        return status, result.model_dump_json() + "\n"
    return EXIT_OK, CheckResult(file=path, status="ok", message="ok").model_dump_json() + "\n"


def run_check(args, write) -> int:
    return _run_many(args.files, check_one, write)


def run_report(args, write) -> int:
    output_format = args.format or settings.DEFAULT_FORMAT

    def report_one(path: str) -> Tuple[int, str]:
        try:
            g, data = load_graph(path)
            report = report_service.build_report(g, source=data, tower=args.tower)
        except (SinggraphError, OSError) as e:
            return failure_status(e), ""
        if output_format == "text":
            return EXIT_OK, render_service.render_text(report)
        return EXIT_OK, report_service.to_json(report)

    return _run_many(args.files, report_one, write)


def run_configs(args, write) -> int:
    try:
        g, _ = load_graph(args.file)
        invariants = cycle_service.scalar_invariants(g)
        configs = configuration_service.classify_all(g, invariants.z)
        h1 = configuration_service.h1_A(g, invariants.z, configs)
    except (SinggraphError, OSError) as e:
        return failure_status(e)
    payload = {
        "configurations": [
            {
                "core": list(config.core_vertices),
                "n": config.n,
                "class": config.config_class.tag.value,
                "label": config.config_class.label,
                "q": config.config_class.q,
                "s": config.s,
                "black": config.black_vertex,
            }
            for config in configs
        ],
        "h1_A": h1,
    }
    write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    return EXIT_OK


def run_blowdown(args, write) -> int:
    try:
        g, _ = load_graph(args.file)
        if args.tower:
            levels = report_service.tower_levels(blowdown_service.blowdown_tower(g))
            payload = [level.model_dump(mode="json") for level in levels]
        else:
            step = blowdown_service.tjurina_contract(g)
            payload = {
                "contracted": list(step.contracted),
                "surviving": list(step.surviving),
                "fibers": [
                    {"graph": graph_service.to_document(fiber).model_dump(mode="json"), "ade": ade}
                    for fiber, ade in zip(step.fibers, step.fiber_types)
                ],
            }
    except (SinggraphError, OSError) as e:
        return failure_status(e)
    write(json.dumps(payload, indent=2, ensure_ascii=False) + "\n")
    return EXIT_OK


def run_dot(args, write) -> int:
    try:
        g, _ = load_graph(args.file)
        invariants = cycle_service.scalar_invariants(g)
        configs: List = []
        if invariants.rational:
            try:
                configs = configuration_service.classify_all(g, invariants.z)
            except DomainError:
                configs = configuration_service.extract_configurations(g, invariants.z)
    except (SinggraphError, OSError) as e:
        return failure_status(e)
    write(render_service.emit_dot(g, invariants.z, configs))
    return EXIT_OK


def report_schema_text() -> str:
    return resources.files("singgraph.schemas").joinpath("report.schema.json").read_text(encoding="utf-8")


def run_schema(args, write) -> int:
    write(report_schema_text())
    return EXIT_OK

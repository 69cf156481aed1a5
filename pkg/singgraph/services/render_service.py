"""
渲染服务
负责报告的文本表格以及 DOT 图（黑顶点填充、白顶点空心，每个 RDP 配置一个 cluster）
"""
from typing import List, Optional

from singgraph.schemas.configuration import RdpConfiguration
from singgraph.schemas.graph import Cycle, DualGraph
from singgraph.schemas.report import CorrectionEntry, IntervalEntry, InvariantReport
from singgraph.services.cycle_service import cycle_service


def _quote(text: str) -> str:
    return '"' + text.replace("\\", "\\\\").replace('"', '\\"') + '"'


def _interval(value: Optional[IntervalEntry]) -> str:
    if value is None:
        return "-"
    return str(value.lo) if value.lo == value.hi else f"[{value.lo}, {value.hi}]"


def _correction(value: Optional[CorrectionEntry]) -> str:
    if value is None:
        return "-"
    return f"{value.lo} (exact)" if value.exact else f"[{value.lo}, {value.hi}]"


class RenderService:

    def emit_dot(self, g: DualGraph, z: Cycle, configs: List[RdpConfiguration]) -> str:
        """
        输出确定性的 DOT 文本，节点标签为 id:自交数:重数

        Args:
            g: 对偶图
            z: 基本 cycle
            configs: RDP 配置，分类过的用类名作为 cluster 标签，否则用 ADE 名
        """
        profile = cycle_service.intersection_profile(g, z)
        lines = ["graph singgraph {", "  node [shape=circle];"]
        for index, config in enumerate(configs):
            label = config.config_class.label if config.config_class else config.ade.name
            lines.append(f"  subgraph cluster_{index} {{")
            lines.append(f"    label={_quote(label)};")
            for v in config.core_vertices:
                lines.append(f"    {_quote(v)};")
            lines.append("  }")
        for v in g.vertices:
            attributes = [f"label={_quote(f'{v}:{g.weight(v)}:{z[v]}')}"]
            if profile.values[v] < 0:
                attributes += ["style=filled", "fillcolor=black", "fontcolor=white"]
            lines.append(f"  {_quote(v)} [{', '.join(attributes)}];")
        for a, b in g.edges:
            lines.append(f"  {_quote(a)} -- {_quote(b)};")
        lines.append("}")
        return "\n".join(lines) + "\n"

    def render_text(self, report: InvariantReport) -> str:
        """报告的文本表格"""
        rows = [
            ("tool", f"{report.tool.name} {report.tool.version}"),
            ("input", report.input_digest),
            ("vertices", str(len(report.graph.vertices))),
            ("edges", str(len(report.graph.edges))),
            ("negative definite", "yes" if report.negative_definite else "no"),
        ]
        if report.fundamental_cycle is None:
            rows.append(("invariants", f"- ({report.scalars_reason})"))
        else:
            rows += [
                ("Z", " ".join(f"{v}={r}" for v, r in report.fundamental_cycle.items())),
                ("Z^2", str(report.z_self_intersection)),
                ("p_a(Z)", str(report.pa_z)),
                ("e", str(report.e)),
                ("mult", str(report.mult)),
                ("rational", "yes" if report.rational else "no"),
                ("almost reduced", "yes" if report.almost_reduced else "no"),
                ("black vertices", ", ".join(report.black_vertices or []) or "-"),
            ]
        if report.rdp is not None:
            rows.append(("rdp", f"{report.rdp.name} (tau={report.rdp.tau})"))

        if report.configurations is None:
            rows.append(("configurations", f"- ({report.configurations_reason})"))
        else:
            rows.append(("configurations", str(len(report.configurations))))
            for entry in report.configurations:
                name = entry.label or entry.ade
                rows.append(("", f"{name} core={','.join(entry.core)} n={entry.n} s={entry.s} black={entry.black or '-'}"))
            if report.configurations_reason:
                rows.append(("", f"({report.configurations_reason})"))

        rows.append(("h1(A)", str(report.h1_A) if report.h1_A is not None else f"- ({report.h1_A_reason})"))
        if report.c is None:
            rows.append(("c(X)", f"- ({report.c_reason})"))
        else:
            rows += [
                ("c(X)", _correction(report.c)),
                ("dT1", _interval(report.dT1)),
                ("dT2", _interval(report.dT2)),
            ]
        if report.blowdown is not None:
            fibers = "; ".join(
                f"{','.join(fiber.vertices)}" + (f" ({fiber.ade})" if fiber.ade else "")
                for fiber in report.blowdown.fibers
            )
            rows.append(("blowdown fibers", fibers or "-"))
        if report.tower is not None:
            for level in report.tower:
                for fiber in level.fibers:
                    if fiber.rdp is not None:
                        state = f"rdp {fiber.rdp.name} tau={fiber.rdp.tau}"
                    elif fiber.report is not None and fiber.report.c is not None:
                        state = f"e={fiber.e} c={_correction(fiber.report.c)} dT1={_interval(fiber.report.dT1)} dT2={_interval(fiber.report.dT2)}"
                    else:
                        reason = fiber.report.reason if fiber.report else None
                        state = f"e={fiber.e}" + (f" ({reason})" if reason else "")
                    if fiber.terminal == "smooth":
                        state += " smooth"
                    rows.append((f"tower {level.level}", f"{len(fiber.graph.vertices)} vertices, {state}"))

        width = max(len(key) for key, _ in rows)
        return "\n".join(f"{key.ljust(width)}  {value}" for key, value in rows) + "\n"


render_service = RenderService()

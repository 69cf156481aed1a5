"""
报告服务
负责把各个服务的结果汇总为 InvariantReport，以及 check 命令使用的逐项判定
"""
import hashlib
import json
import logging
from typing import List, Optional, Tuple

from singgraph.core.config import settings
from singgraph.core.errors import (
    DomainError,
    NotAlmostReduced,
    NotNegativeDefinite,
    NotRational,
)
from singgraph.schemas.blowdown import BlowdownTower, NodeSummary, TowerNode
from singgraph.schemas.configuration import RdpConfiguration
from singgraph.schemas.correction import CorrectionInterval, DimensionIncrements
from singgraph.schemas.cycle import IntersectionProfile
from singgraph.schemas.graph import Cycle, DualGraph
from singgraph.schemas.report import (
    BlowdownEntry,
    ConfigurationEntry,
    CorrectionEntry,
    FiberEntry,
    HintsEntry,
    IdentityCheck,
    IntervalEntry,
    InvariantReport,
    RdpEntry,
    StepEntry,
    ToolInfo,
    TowerFiberEntry,
    TowerLevel,
    TowerSummaryEntry,
    WitnessEntry,
)
from singgraph.services.blowdown_service import blowdown_service
from singgraph.services.configuration_service import configuration_service
from singgraph.services.correction_service import correction_service
from singgraph.services.cycle_service import cycle_service
from singgraph.services.graph_service import graph_service

logger = logging.getLogger(__name__)


class ReportService:
    """报告汇总服务"""

    def check_graph(self, g: DualGraph) -> None:
        """
        依次检查负定性、有理性、几乎约化，遇到第一个不满足的条件时抛出对应的 DomainError
        """
        if not graph_service.is_negative_definite(g):
            raise NotNegativeDefinite("相交矩阵不是负定的")
        invariants = cycle_service.scalar_invariants(g)
        if not invariants.rational:
            raise NotRational(f"p_a(Z) = {invariants.pa_z}")
        if not invariants.almost_reduced:
            raise NotAlmostReduced("存在自交数不为 -2 且 Z 重数大于 1 的顶点")

    def input_digest(self, g: DualGraph, source: Optional[bytes] = None) -> str:
        data = source if source is not None else graph_service.serialize_graph(g).encode("utf-8")
        return "sha256:" + hashlib.sha256(data).hexdigest()

    def build_report(self, g: DualGraph, source: Optional[bytes] = None, tower: bool = False) -> InvariantReport:
        """
        汇总报告

        Args:
            g: 对偶图
            source: 输入文件的原始字节，用于计算摘要
            tower: 是否计算完整的 blowdown 塔

        Returns:
            InvariantReport: 无法计算的字段为 None，并在 *_reason 中给出原因

        Raises:
            InternalInvariantViolation: 交叉校验失败，不会被降级为空字段
        """
        report = InvariantReport(
            tool=ToolInfo(name=settings.PROJECT_NAME, version=settings.VERSION),
            input_digest=self.input_digest(g, source),
            graph=graph_service.to_document(g),
            negative_definite=graph_service.is_negative_definite(g),
        )
        if not report.negative_definite:
            reason = NotNegativeDefinite.code
            return report.model_copy(update=dict(
                scalars_reason=reason,
                configurations_reason=reason,
                h1_A_reason=reason,
                c_reason=reason,
                increments_reason=reason,
                blowdown_reason=reason,
                tower_reason=reason if tower else None,
            ))

        sequence = cycle_service.fundamental_cycle(g)
        invariants = cycle_service.scalar_invariants(g)
        z = invariants.z
        profile = cycle_service.intersection_profile(g, z)
        update = dict(
            fundamental_cycle=dict(z.multiplicities),
            computing_sequence=[StepEntry(vertex=step.vertex, excess=step.excess) for step in sequence.increments],
            z_self_intersection=invariants.z_self_intersection,
            pa_z=invariants.pa_z,
            e=invariants.e,
            mult=invariants.mult,
            rational=invariants.rational,
            almost_reduced=invariants.almost_reduced,
            intersection_profile=dict(profile.values),
            black_vertices=profile.black,
        )
        if invariants.e == 3 and invariants.rational:
            update["rdp"] = RdpEntry(name=blowdown_service.rdp_name(g), tau=len(g.vertices))

        if not invariants.rational:
            reason = NotRational.code
            update.update(
                configurations_reason=reason,
                h1_A_reason=reason,
                c_reason=reason,
                increments_reason=reason,
                blowdown_reason=reason,
                tower_reason=reason if tower else None,
            )
            return report.model_copy(update=update)

        configs, configs_reason = self._configurations(g, z)
        if configs is not None:
            update["configurations"] = [self._configuration_entry(g, z, profile, config) for config in configs]
            classified = configs_reason is None and all(config.config_class for config in configs)
            if classified:
                update["hints"] = self._hints(configs)
        update["configurations_reason"] = configs_reason

        if configs is None or not invariants.almost_reduced:
            update["h1_A_reason"] = configs_reason or NotAlmostReduced.code
        else:
            h1 = configuration_service.h1_A(g, z, configs)
            update["h1_A"] = h1
            update["identity"] = IdentityCheck(
                configurations_sum=h1,
                intersection_value=configuration_service.identity_value(g, z),
                passed=True,
            )

        c, c_reason = self._correction(g, z, invariants.e, invariants.almost_reduced, configs, configs_reason)
        if c is not None:
            increments = correction_service.increments(invariants, c)
            update.update(
                c=self._correction_entry(c),
                dT1=IntervalEntry(lo=increments.dt1.lo, hi=increments.dt1.hi),
                dT2=IntervalEntry(lo=increments.dt2.lo, hi=increments.dt2.hi),
            )
        update["c_reason"] = c_reason
        update["increments_reason"] = c_reason

        step = blowdown_service.tjurina_contract(g, z)
        update["blowdown"] = BlowdownEntry(
            contracted=list(step.contracted),
            surviving=list(step.surviving),
            fibers=[
                FiberEntry(vertices=list(fiber.vertices), ade=ade)
                for fiber, ade in zip(step.fibers, step.fiber_types)
            ],
        )
        if tower:
            update["tower"] = self.tower_levels(blowdown_service.blowdown_tower(g))
        return report.model_copy(update=update)

    def _configurations(self, g: DualGraph, z: Cycle) -> Tuple[Optional[List[RdpConfiguration]], Optional[str]]:
        almost_reduced = cycle_service.is_almost_reduced(g, z)
        try:
            configs = configuration_service.extract_configurations(g, z)
        except DomainError as e:
            return None, e.code if almost_reduced else NotAlmostReduced.code
        if not almost_reduced:
            return configs, NotAlmostReduced.code
        reason = None
        classified = []
        for config in configs:
            try:
                config_class = configuration_service.classify(config, g, z)
            except DomainError as e:
                logger.warning(f"核心 {config.core_vertices[0]} 无法分类: {e.message}")
                reason = e.code
                classified.append(config)
                continue
            classified.append(config.model_copy(update={"config_class": config_class}))
        return classified, reason

    def _correction(
        self,
        g: DualGraph,
        z: Cycle,
        e: int,
        almost_reduced: bool,
        configs: Optional[List[RdpConfiguration]],
        configs_reason: Optional[str],
    ) -> Tuple[Optional[CorrectionInterval], Optional[str]]:
        if e < 4:
            return None, "embedding_dimension_below_4"
        if not almost_reduced:
            return None, NotAlmostReduced.code
        if configs is None or configs_reason is not None:
            return None, configs_reason
        return correction_service.correction_term(g, z, configs), None

    def _configuration_entry(
        self,
        g: DualGraph,
        z: Cycle,
        profile: IntersectionProfile,
        config: RdpConfiguration,
    ) -> ConfigurationEntry:
        config_class = config.config_class
        return ConfigurationEntry(
            core=list(config.core_vertices),
            ade=config.ade.name,
            n=config.n,
            class_=config_class.tag.value if config_class else None,
            label=config_class.label if config_class else None,
            q=config_class.q if config_class else None,
            m=config_class.m if config_class else None,
            k=config_class.k if config_class else None,
            s=config.s,
            black=config.black_vertex,
            black_vertices=list(config.black_vertices),
            attachments=config.attachments,
            identity_terms={v: (z[v] - 1) * profile.deficit(v) for v in config.core_vertices},
        )

    def _correction_entry(self, c: CorrectionInterval) -> CorrectionEntry:
        return CorrectionEntry(
            lo=c.lo,
            hi=c.hi,
            exact=c.exact,
            witnesses=[
                WitnessEntry(
                    core=list(witness.core_vertices),
                    adjacent=dict(witness.adjacent_profile),
                    counts_toward_lo=witness.counts_toward_lo,
                )
                for witness in c.witnesses
            ],
        )

    def _hints(self, configs: List[RdpConfiguration]) -> HintsEntry:
        three_a = configuration_service.three_a_count(configs)
        return HintsEntry(
            three_a_count=three_a,
            n_histogram=configuration_service.n_histogram(configs),
            only_one_configurations=configuration_service.only_one_configurations(configs),
            no_three_a=three_a == 0,
        )

    def tower_levels(self, tower: BlowdownTower) -> List[TowerLevel]:
        return [
            TowerLevel(
                level=index,
                fibers=[self._tower_entry(parent, node) for parent, node in level],
            )
            for index, level in enumerate(tower.levels())
        ]

    def _tower_entry(self, parent: Optional[int], node: TowerNode) -> TowerFiberEntry:
        entry = TowerFiberEntry(
            parent=parent,
            graph=graph_service.to_document(node.graph),
            e=node.e,
            terminal=node.terminal.value if node.terminal else None,
        )
        if node.rdp is not None or node.tau is not None:
            entry.rdp = RdpEntry(name=node.rdp, tau=node.tau)
        if node.summary is not None:
            entry.report = self._summary_entry(node.summary)
        return entry

    def _summary_entry(self, summary: NodeSummary) -> TowerSummaryEntry:
        increments: Optional[DimensionIncrements] = summary.increments
        return TowerSummaryEntry(
            e=summary.e,
            mult=summary.mult,
            z_self_intersection=summary.z_self_intersection,
            pa_z=summary.pa_z,
            almost_reduced=summary.almost_reduced,
            c=self._correction_entry(summary.c) if summary.c else None,
            dT1=IntervalEntry(lo=increments.dt1.lo, hi=increments.dt1.hi) if increments else None,
            dT2=IntervalEntry(lo=increments.dt2.lo, hi=increments.dt2.hi) if increments else None,
            reason=summary.reason,
        )

    def to_json(self, report: InvariantReport) -> str:
        return json.dumps(report.model_dump(mode="json", by_alias=True), indent=2, ensure_ascii=False) + "\n"


report_service = ReportService()

"""
Blowdown 服务
负责 Tjurina 收缩（对最大理想做 blowup 后剩下的奇点）以及递归得到的 blowdown 塔
"""
import logging
from typing import Optional

from singgraph.core.config import settings
from singgraph.core.errors import (
    DomainError,
    DomainMismatch,
    InternalInvariantViolation,
    NotRational,
)
from singgraph.schemas.blowdown import BlowdownStep, BlowdownTower, NodeSummary, TerminalKind, TowerNode
from singgraph.schemas.graph import Cycle, DualGraph
from singgraph.services.catalog_service import catalog_service
from singgraph.services.correction_service import correction_service
from singgraph.services.cycle_service import cycle_service
from singgraph.services.graph_service import graph_service

logger = logging.getLogger(__name__)


class BlowdownService:

    def tjurina_contract(self, g: DualGraph, z: Optional[Cycle] = None) -> BlowdownStep:
        """
        收缩所有 Z·E_v = 0 的顶点

        Args:
            g: 有理图
            z: g 的基本 cycle，省略时由 g 计算

        Returns:
            BlowdownStep: fibers 为被收缩顶点的连通分量，每个都是有理图

        Raises:
            NotRational: g 不是有理图
            DomainMismatch: z 不是 g 的基本 cycle
            InternalInvariantViolation: 某个 fiber 不是有理图
        """
        invariants = cycle_service.scalar_invariants(g)
        if not invariants.rational:
            raise NotRational("只对有理图做 Tjurina 收缩")
        if z is None:
            z = invariants.z
        elif z != invariants.z:
            raise DomainMismatch("给定的 cycle 不是基本 cycle")
        profile = cycle_service.intersection_profile(g, z)
        contracted = profile.white
        fibers = tuple(
            graph_service.induced_subgraph(g, component)
            for component in graph_service.components(g, contracted)
        )
        for fiber in fibers:
            if not cycle_service.is_rational(fiber):
                raise InternalInvariantViolation(f"fiber {fiber.vertices[0]} 不是有理图")
        logger.debug(f"收缩 {len(contracted)} 个顶点，得到 {len(fibers)} 个 fiber")
        return BlowdownStep(
            contracted=tuple(contracted),
            fibers=fibers,
            surviving=tuple(profile.black),
            fiber_types=tuple(self.rdp_name(fiber) for fiber in fibers),
        )

    def rdp_name(self, g: DualGraph) -> Optional[str]:
        """全部为 -2 曲线的图的 ADE 名，其他图返回 None"""
        if any(w != -2 for w in g.weights):
            return None
        return catalog_service.recognize_shape(graph_service.to_networkx(g)).name

    def blowdown_tower(self, g: DualGraph) -> BlowdownTower:
        """
        反复做 Tjurina 收缩直到所有分支都结束于 RDP（e = 3）或光滑点（没有 fiber）

        Raises:
            NotRational: 输入不是有理图
        """
        return BlowdownTower(root=self._node(g, 0))

    def _node(self, g: DualGraph, level: int) -> TowerNode:
        if level > settings.MAX_TOWER_DEPTH:
            raise InternalInvariantViolation(f"blowdown 塔超过 {settings.MAX_TOWER_DEPTH} 层")
        invariants = cycle_service.scalar_invariants(g)
        if not invariants.rational:
            if level == 0:
                raise NotRational("blowdown 塔要求有理图")
            raise InternalInvariantViolation(f"第 {level} 层出现非有理 fiber")

        if invariants.e == 3:
            return TowerNode(
                level=level,
                graph=g,
                e=3,
                terminal=TerminalKind.RDP,
                rdp=self.rdp_name(g),
                tau=len(g.vertices),
            )

        summary = self._summary(g, invariants)
        step = self.tjurina_contract(g, invariants.z)
        if not step.fibers:
            return TowerNode(level=level, graph=g, e=invariants.e, terminal=TerminalKind.SMOOTH, summary=summary)
        return TowerNode(
            level=level,
            graph=g,
            e=invariants.e,
            summary=summary,
            children=tuple(self._node(fiber, level + 1) for fiber in step.fibers),
        )

    def _summary(self, g: DualGraph, invariants) -> NodeSummary:
        fields = dict(
            e=invariants.e,
            mult=invariants.mult,
            z_self_intersection=invariants.z_self_intersection,
            pa_z=invariants.pa_z,
            almost_reduced=invariants.almost_reduced,
        )
        try:
            c = correction_service.correction_term(g, invariants.z)
        except DomainError as e:
            return NodeSummary(**fields, reason=e.code)
        return NodeSummary(**fields, c=c, increments=correction_service.increments(invariants, c))


blowdown_service = BlowdownService()

"""
基本 cycle 服务
负责 Laufer 计算序列、算术亏格、两种有理性判别以及由 Z 导出的数值不变量
"""
import logging
from functools import lru_cache
from typing import Dict, List

from singgraph.core.errors import (
    CriterionDisagreement,
    NotNegativeDefinite,
    ParityError,
)
from singgraph.schemas.cycle import ComputingSequence, ComputingStep, IntersectionProfile, ScalarInvariants
from singgraph.schemas.graph import Cycle, DualGraph
from singgraph.services.graph_service import graph_service

logger = logging.getLogger(__name__)


@lru_cache(maxsize=2048)
def _negative_definite(g: DualGraph) -> bool:
    return graph_service.is_negative_definite(g)


@lru_cache(maxsize=2048)
def _computing_sequence(g: DualGraph) -> ComputingSequence:
    z: Dict[str, int] = {v: 1 for v in g.vertices}
    steps: List[ComputingStep] = []
    while True:
        chosen = None
        excess = 0
        # 下标最小的 Z·E_v > 0 的顶点
        for v in g.vertices:
            value = g.weight(v) * z[v] + sum(z[u] for u in g.neighbors(v))
            if value > 0:
                chosen, excess = v, value
                break
        steps.append(ComputingStep(cycle=Cycle(multiplicities=dict(z)), vertex=chosen, excess=excess))
        if chosen is None:
            break
        z[chosen] += 1
    return ComputingSequence(steps=tuple(steps), start_genus=1 + len(g.edges) - len(g.vertices))


class CycleService:
    """基本 cycle 与有理性判别"""

    def require_negative_definite(self, g: DualGraph) -> None:
        if not _negative_definite(g):
            raise NotNegativeDefinite(f"{len(g.vertices)} 个顶点的相交矩阵不是负定的")

    def fundamental_cycle(self, g: DualGraph) -> ComputingSequence:
        """
        从 E 开始，每次给下标最小的 Z·E_v > 0 的顶点加 1，直到所有 Z·E_v ≤ 0

        Args:
            g: 对偶图，相交矩阵必须负定

        Returns:
            ComputingSequence: 记录每一步的计算序列，最后一步的 cycle 即 Z

        Raises:
            NotNegativeDefinite: 相交矩阵不负定（此时序列可能不终止）
        """
        self.require_negative_definite(g)
        sequence = _computing_sequence(g)
        logger.debug(f"基本 cycle 经过 {len(sequence.increments)} 步得到")
        return sequence

    def is_rational_laufer(self, sequence: ComputingSequence) -> bool:
        """起点亏格为 0（图是树）且每一步的 excess 都恰好为 1"""
        return sequence.start_genus == 0 and all(step.excess == 1 for step in sequence.increments)

    def arithmetic_genus(self, g: DualGraph, c: Cycle) -> int:
        """p_a(c) = 1 + (c² + K·c)/2"""
        total = graph_service.pairing(g, c, c) + graph_service.canonical_pairing(g, c)
        if total % 2:
            raise ParityError(f"c² + K·c = {total} 为奇数")
        return 1 + total // 2

    def is_rational_artin(self, g: DualGraph) -> bool:
        """p_a(Z) = 0"""
        return self.arithmetic_genus(g, self.fundamental_cycle(g).final) == 0

    def is_rational(self, g: DualGraph) -> bool:
        return self.scalar_invariants(g).rational

    def intersection_profile(self, g: DualGraph, z: Cycle) -> IntersectionProfile:
        graph_service.cycle(g, z.multiplicities)
        return IntersectionProfile(
            values={v: graph_service.pairing_with_vertex(g, z, v) for v in g.vertices}
        )

    def is_almost_reduced(self, g: DualGraph, z: Cycle) -> bool:
        """所有自交数不为 -2 的顶点上 Z 的重数都是 1"""
        return all(z[v] == 1 for v, w in zip(g.vertices, g.weights) if w != -2)

    def scalar_invariants(self, g: DualGraph) -> ScalarInvariants:
        """
        计算 Z、Z²、p_a(Z)、e、mult 以及两种判别的结果，两者不一致时抛出 CriterionDisagreement
        """
        sequence = self.fundamental_cycle(g)
        z = sequence.final
        z_squared = graph_service.pairing(g, z, z)
        pa_z = self.arithmetic_genus(g, z)
        laufer = self.is_rational_laufer(sequence)
        artin = pa_z == 0
        if laufer != artin:
            raise CriterionDisagreement(f"Laufer 判别为 {laufer}，但 p_a(Z) = {pa_z}")
        e = -z_squared + 1
        return ScalarInvariants(
            z=z,
            z_self_intersection=z_squared,
            pa_z=pa_z,
            e=e,
            mult=e - 1,
            almost_reduced=self.is_almost_reduced(g, z),
            laufer_rational=laufer,
            artin_rational=artin,
        )


cycle_service = CycleService()

"""
修正项服务
负责 c(X) 的区间估计以及 T¹、T² 维数相对于 e 的增量
"""
import logging
from typing import List, Optional

from singgraph.core.errors import EmbeddingDimensionTooSmall, NotAlmostReduced
from singgraph.schemas.configuration import ConfigTag, RdpConfiguration
from singgraph.schemas.correction import CorrectionInterval, CorrectionWitness, DimensionIncrements, IntegerInterval
from singgraph.schemas.cycle import ScalarInvariants
from singgraph.schemas.graph import Cycle, DualGraph
from singgraph.services.configuration_service import configuration_service
from singgraph.services.cycle_service import cycle_service
from singgraph.services.graph_service import graph_service

logger = logging.getLogger(__name__)


class CorrectionService:

    def correction_term(
        self,
        g: DualGraph,
        z: Cycle,
        configs: Optional[List[RdpConfiguration]] = None,
    ) -> CorrectionInterval:
        """
        c(X) 的区间 [lo, hi]

        hi 为 ThreeA 配置的个数；lo 只计入那些所有相邻外部曲线都满足 Z·E < 0 的 ThreeA 配置。
        未分类的配置会先分类。

        Raises:
            EmbeddingDimensionTooSmall: e < 4
            NotAlmostReduced: Z 不是几乎约化的
        """
        e = 1 - graph_service.pairing(g, z, z)
        if e < 4:
            raise EmbeddingDimensionTooSmall(f"嵌入维数 e = {e} < 4")
        if not cycle_service.is_almost_reduced(g, z):
            raise NotAlmostReduced("c(X) 只对几乎约化的 Z 有定义")
        if configs is None:
            configs = configuration_service.classify_all(g, z)
        profile = cycle_service.intersection_profile(g, z)

        witnesses = []
        for config in configs:
            config_class = config.config_class or configuration_service.classify(config, g, z)
            if config_class.tag != ConfigTag.THREE_A:
                continue
            adjacent = config.outside_neighbors
            adjacent_profile = {u: profile.values[u] for u in adjacent}
            witnesses.append(CorrectionWitness(
                core_vertices=config.core_vertices,
                adjacent=adjacent,
                adjacent_profile=adjacent_profile,
                counts_toward_lo=all(value < 0 for value in adjacent_profile.values()),
            ))
        hi = len(witnesses)
        lo = sum(1 for witness in witnesses if witness.counts_toward_lo)
        logger.debug(f"c(X) ∈ [{lo}, {hi}]")
        return CorrectionInterval(lo=lo, hi=hi, witnesses=tuple(witnesses))

    def increments(self, invariants: ScalarInvariants, c: CorrectionInterval) -> DimensionIncrements:
        """dT1 = e - 4 + c，dT2 = (e - 2)(e - 4) + c"""
        e = invariants.e
        if e < 4:
            raise EmbeddingDimensionTooSmall(f"嵌入维数 e = {e} < 4")
        return DimensionIncrements(
            dt1=c.interval.shift(e - 4),
            dt2=c.interval.shift((e - 2) * (e - 4)),
        )

    def cone_increments(self, d: int) -> DimensionIncrements:
        """自交数 -d 的单顶点图（d 次有理正规曲线上的锥）的已知增量"""
        return DimensionIncrements(
            dt1=IntegerInterval(lo=d - 3, hi=d - 3),
            dt2=IntegerInterval(lo=(d - 1) * (d - 3), hi=(d - 1) * (d - 3)),
        )


correction_service = CorrectionService()

"""
RDP 配置服务
负责从有理图中抽取 RDP 配置、按目录分类、读出黑顶点重数，以及 h¹(A) 的交叉校验
"""
import logging
from collections import Counter
from typing import Dict, List

from singgraph.core.errors import (
    IdentityViolation,
    MultipleBlackVertices,
    NotAlmostReduced,
    NotRational,
)
from singgraph.schemas.configuration import ConfigClass, ConfigTag, RdpConfiguration
from singgraph.schemas.graph import Cycle, DualGraph
from singgraph.services.catalog_service import catalog_service
from singgraph.services.cycle_service import cycle_service
from singgraph.services.graph_service import graph_service

logger = logging.getLogger(__name__)


class ConfigurationService:
    """RDP 配置的抽取与分类"""

    def extract_configurations(self, g: DualGraph, z: Cycle) -> List[RdpConfiguration]:
        """
        抽取全部 RDP 配置（未分类）

        Args:
            g: 有理对偶图
            z: g 的基本 cycle

        Returns:
            List[RdpConfiguration]: 按核心中最小顶点下标排序

        Raises:
            NotRational: g 不是有理图
            MultipleBlackVertices: 某个 n > 0 的核心上有多于一个黑顶点
        """
        if not cycle_service.is_rational(g):
            raise NotRational("只能从有理图中抽取 RDP 配置")
        graph_service.cycle(g, z.multiplicities)
        profile = cycle_service.intersection_profile(g, z)
        nx_graph = graph_service.to_networkx(g)

        minus_two = [v for v, w in zip(g.vertices, g.weights) if w == -2]
        configurations = []
        for core_vertices in graph_service.components(g, minus_two):
            core_set = set(core_vertices)
            attached = [
                (v, u)
                for v in core_vertices
                for u in g.neighbors(v)
                if u not in core_set
            ]
            shape = catalog_service.recognize_shape(nx_graph.subgraph(core_vertices))
            blacks = tuple(v for v in core_vertices if profile.values[v] < 0)
            if len(blacks) > 1 and attached:
                raise MultipleBlackVertices(
                    f"核心 {core_vertices[0]} 上有 {len(blacks)} 个黑顶点: {', '.join(blacks)}"
                )
            black = blacks[0] if len(blacks) == 1 else None
            configurations.append(RdpConfiguration(
                core_vertices=tuple(core_vertices),
                attached_edges=tuple(attached),
                ade=shape,
                multiplicities={v: z[v] for v in core_vertices},
                black_vertices=blacks,
                black_vertex=black,
                s=z[black] if black is not None else 1,
            ))
        logger.debug(f"抽取到 {len(configurations)} 个 RDP 配置")
        return configurations

    def classify(self, config: RdpConfiguration, g: DualGraph, z: Cycle) -> ConfigClass:
        """
        在目录中识别配置的类

        Raises:
            NotAlmostReduced: Z 不是几乎约化的
            NotInCatalog: 不匹配任何模板
        """
        if not cycle_service.is_almost_reduced(g, z):
            raise NotAlmostReduced("分类要求 Z 几乎约化")
        core = graph_service.to_networkx(g).subgraph(config.core_vertices)
        return catalog_service.match(
            core,
            {v: z[v] for v in config.core_vertices},
            config.attachments,
            order_key=g.index,
        )

    def classify_all(self, g: DualGraph, z: Cycle) -> List[RdpConfiguration]:
        return [
            config.model_copy(update={"config_class": self.classify(config, g, z)})
            for config in self.extract_configurations(g, z)
        ]

    def black_weight(self, config: RdpConfiguration) -> int:
        """黑顶点上 Z 的重数，没有唯一黑顶点时为 1"""
        return config.s

    def h1_A(self, g: DualGraph, z: Cycle, configs: List[RdpConfiguration]) -> int:
        """
        h¹(A) = Σ (s - 1)，并与 (Z - E)·(K - Z) 比较

        Raises:
            NotAlmostReduced: Z 不是几乎约化的
            IdentityViolation: 两种算法结果不一致
        """
        if not cycle_service.is_almost_reduced(g, z):
            raise NotAlmostReduced("h¹(A) 要求 Z 几乎约化")
        total = sum(self.black_weight(config) - 1 for config in configs)
        expected = self.identity_value(g, z)
        if total != expected:
            raise IdentityViolation(f"Σ(s-1) = {total}，但 (Z-E)·(K-Z) = {expected}")
        return total

    def identity_value(self, g: DualGraph, z: Cycle) -> int:
        """(Z - E)·(K - Z) = K·(Z - E) - (Z - E)·Z"""
        difference = z - graph_service.reduced_cycle(g)
        return graph_service.canonical_pairing(g, difference) - graph_service.pairing(g, difference, z)

    # 报告中的汇总信息

    def three_a_count(self, configs: List[RdpConfiguration]) -> int:
        return sum(1 for config in configs if config.config_class and config.config_class.tag == ConfigTag.THREE_A)

    def n_histogram(self, configs: List[RdpConfiguration]) -> Dict[str, int]:
        """各个 n 的配置个数，0..3 总是出现，更大的 n 只在出现时列出"""
        counts = Counter(config.n for config in configs)
        return {str(n): counts.get(n, 0) for n in sorted(set(range(4)) | set(counts))}

    def only_one_configurations(self, configs: List[RdpConfiguration]) -> bool:
        """没有 n ≥ 2 的配置"""
        return all(config.n <= 1 for config in configs)


configuration_service = ConfigurationService()

"""
图生成服务
负责链、循环商奇点（Hirzebruch-Jung 连分数）、目录类实例以及随机负定树的生成
"""
import logging
import math
import random
from typing import List, Optional, Sequence

from singgraph.core.errors import InvalidParameters, ValidationError, ValidationReason
from singgraph.schemas.configuration import ConfigClass
from singgraph.schemas.graph import DualGraph
from singgraph.services.catalog_service import catalog_service
from singgraph.services.graph_service import graph_service

logger = logging.getLogger(__name__)

# 随机树的默认权重分布，偏向 -2
DEFAULT_WEIGHT_CHOICES = (-2, -2, -2, -2, -3, -3, -4, -5)


class GeneratorService:

    def gen_chain(self, weights: Sequence[int]) -> DualGraph:
        """
        顶点 v1..vk 依次相连的链

        Raises:
            ValidationError: 权重为空，或有权重大于 -2
        """
        if not weights:
            raise ValidationError(ValidationReason.EMPTY_GRAPH, "链至少需要一个顶点")
        for w in weights:
            if w > -2:
                raise ValidationError(ValidationReason.WEIGHT_ABOVE_MINUS_TWO, f"自交数必须 ≤ -2，得到 {w}")
        vertices = [f"v{i + 1}" for i in range(len(weights))]
        return graph_service.build_graph(
            vertices,
            dict(zip(vertices, weights)),
            [(vertices[i], vertices[i + 1]) for i in range(len(vertices) - 1)],
        )

    def continued_fraction(self, n: int, q: int) -> List[int]:
        """
        n/q 的 Hirzebruch-Jung 连分数 [b1, ..., bk]，n/q = b1 - 1/(b2 - 1/(...))，每个 bi ≥ 2

        Raises:
            InvalidParameters: 不满足 0 < q < n 且 gcd(n, q) = 1
        """
        if not (0 < q < n) or math.gcd(n, q) != 1:
            raise InvalidParameters(f"需要 0 < q < n 且 gcd(n, q) = 1，得到 n={n}, q={q}")
        result = []
        while q > 0:
            b = -(-n // q)
            result.append(b)
            n, q = q, b * q - n
        return result

    def gen_cyclic(self, n: int, q: int) -> DualGraph:
        """循环商奇点 1/n(1, q) 的解消图"""
        return self.gen_chain([-b for b in self.continued_fraction(n, q)])

    def gen_catalog(self, config_class: ConfigClass, attachment_weights: Sequence[int]) -> DualGraph:
        """
        构造目录中某一类配置的实例：核心为 -2 曲线，每条连出边接一个给定自交数（≤ -3）的叶子

        Raises:
            InvalidParameters: 参数不合法或权重个数不等于 n
        """
        vertices, weights, edges = catalog_service.instantiate(config_class, attachment_weights)
        return graph_service.build_graph(vertices, weights, edges)

    def random_tree(
        self,
        rng: random.Random,
        max_vertices: int = 8,
        weight_choices: Sequence[int] = DEFAULT_WEIGHT_CHOICES,
        negative_definite: bool = True,
        max_attempts: int = 1000,
        vertices: Optional[int] = None,
    ) -> DualGraph:
        """
        随机树：顶点 t1..tn，第 i 个顶点接到前面随机一个顶点上

        Args:
            rng: 随机数发生器，结果只依赖于它的状态
            max_vertices: 顶点数上限（vertices 未给出时在 1..max_vertices 中均匀选取）
            weight_choices: 权重的取值分布
            negative_definite: 为 True 时拒绝采样直到相交矩阵负定
            max_attempts: 拒绝采样的次数上限
            vertices: 固定的顶点数
        """
        if max_vertices < 1 or (vertices is not None and vertices < 1):
            raise InvalidParameters("随机树至少需要一个顶点")
        for _ in range(max_attempts):
            n = vertices if vertices is not None else rng.randint(1, max_vertices)
            ids = [f"t{i + 1}" for i in range(n)]
            weights = {v: rng.choice(weight_choices) for v in ids}
            edges = [(ids[rng.randrange(i)], ids[i]) for i in range(1, n)]
            g = graph_service.build_graph(ids, weights, edges)
            if not negative_definite or graph_service.is_negative_definite(g):
                return g
        raise InvalidParameters(f"{max_attempts} 次尝试后仍未得到负定树")


generator_service = GeneratorService()

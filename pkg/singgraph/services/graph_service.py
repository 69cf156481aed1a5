"""
对偶图服务
负责解析/校验/序列化对偶图，以及相交形式、典范除子和负定性判断
"""
import json
import logging
from fractions import Fraction
from typing import Dict, Iterable, List, Mapping, Optional, Tuple, Union

import networkx as nx
from pydantic import ValidationError as PydanticValidationError

from singgraph.core.errors import (
    DomainMismatch,
    SchemaError,
    ValidationError,
    ValidationReason,
)
from singgraph.schemas.graph import AdjunctionData, Cycle, DualGraph, GraphDocument, VertexDocument

logger = logging.getLogger(__name__)


class GraphService:
    """对偶图服务"""

    def parse_graph(self, text: Union[str, bytes]) -> DualGraph:
        """
        解析 JSON 文本为 DualGraph

        Args:
            text: {"vertices": [{"id", "sq"}], "edges": [[a, b]]} 格式的 JSON

        Returns:
            DualGraph: 校验通过的图

        Raises:
            SchemaError: JSON 无法解析或结构不符
            ValidationError: 图的结构不合法
        """
        try:
            document = GraphDocument.model_validate_json(text)
        except PydanticValidationError as e:
            raise SchemaError(f"输入不符合图格式: {e.errors()[0]['msg'] if e.errors() else e}")
        return self.from_document(document)

    def from_document(self, document: GraphDocument) -> DualGraph:
        ids = [vertex.id for vertex in document.vertices]
        return self.build_graph(
            ids,
            {vertex.id: vertex.sq for vertex in document.vertices},
            document.edges,
        )

    def build_graph(
        self,
        vertices: List[str],
        weights: Mapping[str, int],
        edges: Iterable[Tuple[str, str]],
    ) -> DualGraph:
        """
        校验并构造 DualGraph，检查顺序：DuplicateId, WeightAboveMinusTwo, UnknownVertex, SelfLoop,
        DuplicateEdge, EmptyGraph, Disconnected
        """
        seen = set()
        for v in vertices:
            if v in seen:
                raise ValidationError(ValidationReason.DUPLICATE_ID, f"顶点 {v!r} 重复")
            seen.add(v)

        for v in vertices:
            if weights[v] > -2:
                raise ValidationError(
                    ValidationReason.WEIGHT_ABOVE_MINUS_TWO,
                    f"顶点 {v!r} 的自交数 {weights[v]} 大于 -2",
                )

        index = {v: i for i, v in enumerate(vertices)}
        canonical = []
        seen_edges = set()
        for a, b in edges:
            for endpoint in (a, b):
                if endpoint not in index:
                    raise ValidationError(ValidationReason.UNKNOWN_VERTEX, f"边 ({a}, {b}) 引用了未知顶点 {endpoint!r}")
            if a == b:
                raise ValidationError(ValidationReason.SELF_LOOP, f"顶点 {a!r} 上有自环")
            key = frozenset((a, b))
            if key in seen_edges:
                raise ValidationError(ValidationReason.DUPLICATE_EDGE, f"边 ({a}, {b}) 重复")
            seen_edges.add(key)
            canonical.append((a, b) if index[a] < index[b] else (b, a))

        if not vertices:
            raise ValidationError(ValidationReason.EMPTY_GRAPH, "图中没有顶点")

        nx_graph = nx.Graph()
        nx_graph.add_nodes_from(vertices)
        nx_graph.add_edges_from(canonical)
        if not nx.is_connected(nx_graph):
            raise ValidationError(
                ValidationReason.DISCONNECTED,
                f"图有 {nx.number_connected_components(nx_graph)} 个连通分量",
            )

        canonical.sort(key=lambda edge: (index[edge[0]], index[edge[1]]))
        return DualGraph(
            vertices=tuple(vertices),
            weights=tuple(weights[v] for v in vertices),
            edges=tuple(canonical),
        )

    def to_document(self, g: DualGraph) -> GraphDocument:
        return GraphDocument(
            vertices=[VertexDocument(id=v, sq=w) for v, w in zip(g.vertices, g.weights)],
            edges=sorted(tuple(sorted(edge)) for edge in g.edges),
        )

    def serialize_graph(self, g: DualGraph) -> str:
        """规范序列化：顶点按图中顺序，每条边的两端按 id 排序，边按字典序排列，输出逐字节稳定"""
        return json.dumps(self.to_document(g).model_dump(mode="json"), indent=2, ensure_ascii=False) + "\n"

    def to_networkx(self, g: DualGraph) -> nx.Graph:
        nx_graph = nx.Graph()
        for v, w in zip(g.vertices, g.weights):
            nx_graph.add_node(v, sq=w)
        nx_graph.add_edges_from(g.edges)
        return nx_graph

    def is_tree(self, g: DualGraph) -> bool:
        return len(g.edges) == len(g.vertices) - 1

    def induced_subgraph(self, g: DualGraph, vertices: Iterable[str]) -> DualGraph:
        """诱导子图，顶点保持原图顺序，权重继承；子图必须连通"""
        keep = set(vertices)
        ordered = [v for v in g.vertices if v in keep]
        return self.build_graph(
            ordered,
            {v: g.weight(v) for v in ordered},
            [(a, b) for a, b in g.edges if a in keep and b in keep],
        )

    def components(self, g: DualGraph, vertices: Iterable[str]) -> List[List[str]]:
        """给定顶点集合诱导子图的连通分量，分量内和分量之间都按原图顶点顺序排列"""
        keep = set(vertices)
        nx_graph = self.to_networkx(g).subgraph(keep)
        result = [sorted(component, key=g.index) for component in nx.connected_components(nx_graph)]
        result.sort(key=lambda component: g.index(component[0]))
        return result

    def relabel(self, g: DualGraph, mapping: Mapping[str, str], order: Optional[List[str]] = None) -> DualGraph:
        """
        重命名顶点，可选地同时改变顶点顺序

        Args:
            g: 原图
            mapping: 旧 id -> 新 id，必须是双射
            order: 新 id 的顺序，默认沿用原顺序
        """
        if set(mapping) != set(g.vertices) or len(set(mapping.values())) != len(mapping):
            raise ValueError("重命名映射必须是顶点集合上的双射")
        new_vertices = order if order is not None else [mapping[v] for v in g.vertices]
        return self.build_graph(
            list(new_vertices),
            {mapping[v]: g.weight(v) for v in g.vertices},
            [(mapping[a], mapping[b]) for a, b in g.edges],
        )

    # 相交形式

    def intersection_matrix(self, g: DualGraph) -> List[List[int]]:
        n = len(g.vertices)
        matrix = [[0] * n for _ in range(n)]
        for i, w in enumerate(g.weights):
            matrix[i][i] = w
        for a, b in g.edges:
            i, j = g.index(a), g.index(b)
            matrix[i][j] = matrix[j][i] = 1
        return matrix

    def is_negative_definite(self, g: DualGraph) -> bool:
        """
        判断相交矩阵是否负定

        对 -M 做不选主元的有理数 Gauss 消元，正定当且仅当所有主元为正。按稀疏行存储，链和树的消元开销很小。
        """
        n = len(g.vertices)
        rows: List[Dict[int, Fraction]] = [dict() for _ in range(n)]
        for i, w in enumerate(g.weights):
            rows[i][i] = Fraction(-w)
        for a, b in g.edges:
            i, j = g.index(a), g.index(b)
            rows[i][j] = Fraction(-1)
            rows[j][i] = Fraction(-1)

        for i in range(n):
            pivot = rows[i].get(i, Fraction(0))
            if pivot <= 0:
                logger.debug(f"第 {i} 个主元为 {pivot}，不是负定")
                return False
            pivot_row = {k: x for k, x in rows[i].items() if k > i}
            for j in list(pivot_row):
                factor = rows[j].get(i)
                if not factor:
                    continue
                factor = factor / pivot
                target = rows[j]
                for k, x in pivot_row.items():
                    value = target.get(k, Fraction(0)) - factor * x
                    if value:
                        target[k] = value
                    else:
                        target.pop(k, None)
                target.pop(i, None)
        return True

    def _check_domain(self, g: DualGraph, *cycles: Cycle) -> None:
        for c in cycles:
            if c.multiplicities.keys() != set(g.vertices):
                raise DomainMismatch("cycle 的顶点集合与图不一致")

    def pairing(self, g: DualGraph, c1: Cycle, c2: Cycle) -> int:
        """相交数 c1·c2"""
        self._check_domain(g, c1, c2)
        total = 0
        for v, w in zip(g.vertices, g.weights):
            r = c1.multiplicities[v]
            if r == 0:
                continue
            total += r * (w * c2.multiplicities[v] + sum(c2.multiplicities[u] for u in g.neighbors(v)))
        return total

    def pairing_with_vertex(self, g: DualGraph, c: Cycle, v: str) -> int:
        """c·E_v"""
        return g.weight(v) * c.multiplicities[v] + sum(c.multiplicities[u] for u in g.neighbors(v))

    def adjunction(self, g: DualGraph) -> AdjunctionData:
        return AdjunctionData(k={v: -w - 2 for v, w in zip(g.vertices, g.weights)})

    def canonical_pairing(self, g: DualGraph, c: Cycle) -> int:
        """K·c = Σ r_v (-E_v² - 2)"""
        self._check_domain(g, c)
        return sum(c.multiplicities[v] * (-w - 2) for v, w in zip(g.vertices, g.weights))

    # cycle 构造

    def cycle(self, g: DualGraph, multiplicities: Mapping[str, int]) -> Cycle:
        if set(multiplicities) != set(g.vertices):
            raise DomainMismatch("cycle 的顶点集合与图不一致")
        return Cycle(multiplicities={v: int(multiplicities[v]) for v in g.vertices})

    def reduced_cycle(self, g: DualGraph) -> Cycle:
        return Cycle(multiplicities={v: 1 for v in g.vertices})

    def indicator(self, g: DualGraph, v: str) -> Cycle:
        if v not in g:
            raise DomainMismatch(f"顶点 {v!r} 不在图中")
        return Cycle(multiplicities={u: int(u == v) for u in g.vertices})


graph_service = GraphService()

"""
对偶图相关的数据模型

GraphDocument / VertexDocument 是磁盘上的 JSON 格式；DualGraph、Cycle、AdjunctionData 是内部使用的不可变对象。
"""
from types import MappingProxyType
from typing import Dict, List, Mapping, Tuple

from pydantic import BaseModel, ConfigDict, Field, PrivateAttr, StrictInt, StrictStr, field_validator


class VertexDocument(BaseModel):
    """输入文件中的一个顶点"""
    model_config = ConfigDict(extra="forbid")

    id: StrictStr
    sq: StrictInt


class GraphDocument(BaseModel):
    """输入文件的顶层结构"""
    model_config = ConfigDict(extra="forbid")

    vertices: List[VertexDocument]
    edges: List[Tuple[StrictStr, StrictStr]] = Field(default_factory=list)


class DualGraph(BaseModel):
    """
    有限简单图，每个顶点带自交数 E_v² ≤ -2

    vertices 保持输入顺序，weights 与之一一对应；edges 为规范化后的无序边（每条边内部按顶点顺序排列，整体有序）。
    只应通过 graph_service 构造，构造时已经完成全部结构校验。
    """
    model_config = ConfigDict(frozen=True)

    vertices: Tuple[str, ...]
    weights: Tuple[int, ...]
    edges: Tuple[Tuple[str, str], ...]

    _index: Dict[str, int] = PrivateAttr(default_factory=dict)
    _neighbors: Dict[str, Tuple[str, ...]] = PrivateAttr(default_factory=dict)

    def model_post_init(self, __context) -> None:
        self._index = {v: i for i, v in enumerate(self.vertices)}
        adjacency: Dict[str, List[str]] = {v: [] for v in self.vertices}
        for a, b in self.edges:
            adjacency[a].append(b)
            adjacency[b].append(a)
        self._neighbors = {
            v: tuple(sorted(nbrs, key=self._index.__getitem__)) for v, nbrs in adjacency.items()
        }

    @property
    def self_intersection(self) -> Mapping[str, int]:
        return MappingProxyType(dict(zip(self.vertices, self.weights)))

    def weight(self, v: str) -> int:
        return self.weights[self._index[v]]

    def index(self, v: str) -> int:
        return self._index[v]

    def neighbors(self, v: str) -> Tuple[str, ...]:
        return self._neighbors[v]

    def degree(self, v: str) -> int:
        return len(self._neighbors[v])

    def __contains__(self, v: object) -> bool:
        return v in self._index

    def __len__(self) -> int:
        return len(self.vertices)


class Cycle(BaseModel):
    """除子 Σ r_v E_v，键与所属图的顶点集合一致，按图的顶点顺序存放"""
    model_config = ConfigDict(frozen=True)

    multiplicities: Mapping[str, int]

    @field_validator("multiplicities", mode="after")
    @classmethod
    def read_only_multiplicities(cls, value: Mapping[str, int]) -> Mapping[str, int]:
        # 基本 cycle 会被缓存共享，重数表只读
        return MappingProxyType(dict(value))

    def __getitem__(self, v: str) -> int:
        return self.multiplicities[v]

    def support(self) -> List[str]:
        return [v for v, r in self.multiplicities.items() if r != 0]

    def is_positive(self) -> bool:
        return all(r >= 0 for r in self.multiplicities.values()) and bool(self.support())

    def __add__(self, other: "Cycle") -> "Cycle":
        return Cycle(multiplicities={v: r + other.multiplicities[v] for v, r in self.multiplicities.items()})

    def __sub__(self, other: "Cycle") -> "Cycle":
        return Cycle(multiplicities={v: r - other.multiplicities[v] for v, r in self.multiplicities.items()})


class AdjunctionData(BaseModel):
    """典范除子的数值：k_v = K·E_v = -E_v² - 2"""
    model_config = ConfigDict(frozen=True)

    k: Dict[str, int]

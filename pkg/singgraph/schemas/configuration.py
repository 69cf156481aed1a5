"""
RDP 配置相关的数据模型

一个配置是 (-2)-顶点诱导子图的一个连通分量（核心），加上从核心连出去的边。
"""
from enum import Enum
from typing import Dict, Optional, Tuple

from pydantic import BaseModel, ConfigDict, Field


class AdeShape(BaseModel):
    """核心的 ADE 型：family ∈ {A, D, E}，rank 为顶点数"""
    model_config = ConfigDict(frozen=True)

    family: str
    rank: int

    @property
    def name(self) -> str:
        return f"{self.family}{self.rank}"


class ConfigTag(str, Enum):
    ZERO = "ZeroConfig"
    ONE_A = "OneA"
    TWO_AL = "TwoAL"
    TWO_AR = "TwoAR"
    TWO_AS = "TwoAS"
    THREE_A = "ThreeA"
    TWO_D_EVEN = "TwoD_even"
    TWO_D_ODD = "TwoD_odd"
    ONE_D_I = "OneD_I"
    ONE_D_II_EVEN = "OneD_II_even"
    ONE_D_II_ODD = "OneD_II_odd"
    ONE_E6 = "OneE6"
    ONE_E7 = "OneE7"


# 分类中 n（连出去的边数）与标签的对应
TAG_ATTACHMENTS: Dict[ConfigTag, int] = {
    ConfigTag.ZERO: 0,
    ConfigTag.ONE_A: 1,
    ConfigTag.TWO_AL: 2,
    ConfigTag.TWO_AR: 2,
    ConfigTag.TWO_AS: 2,
    ConfigTag.THREE_A: 3,
    ConfigTag.TWO_D_EVEN: 2,
    ConfigTag.TWO_D_ODD: 2,
    ConfigTag.ONE_D_I: 1,
    ConfigTag.ONE_D_II_EVEN: 1,
    ConfigTag.ONE_D_II_ODD: 1,
    ConfigTag.ONE_E6: 1,
    ConfigTag.ONE_E7: 1,
}

# 图示中的符号名，CLI 也接受这些写法
TAG_SYMBOLS: Dict[ConfigTag, str] = {
    ConfigTag.ZERO: "zero",
    ConfigTag.ONE_A: "1-A",
    ConfigTag.TWO_AL: "2-AL",
    ConfigTag.TWO_AR: "2-AR",
    ConfigTag.TWO_AS: "2-AS",
    ConfigTag.THREE_A: "3-A",
    ConfigTag.TWO_D_EVEN: "2-D-even",
    ConfigTag.TWO_D_ODD: "2-D-odd",
    ConfigTag.ONE_D_I: "1-D-I",
    ConfigTag.ONE_D_II_EVEN: "1-D-II-even",
    ConfigTag.ONE_D_II_ODD: "1-D-II-odd",
    ConfigTag.ONE_E6: "1-E6",
    ConfigTag.ONE_E7: "1-E7",
}


class ConfigClass(BaseModel):
    """
    分类结果

    A 型用 (q, m)，2-AS 只用 m，D 型用 k（m 由 k 和奇偶性决定，1-D^I 中 m = k），ZeroConfig 用 ade。
    """
    model_config = ConfigDict(frozen=True)

    tag: ConfigTag
    q: Optional[int] = None
    m: Optional[int] = None
    k: Optional[int] = None
    ade: Optional[str] = None

    @property
    def n(self) -> int:
        return TAG_ATTACHMENTS[self.tag]

    @property
    def label(self) -> str:
        """如 ZeroConfig(D4)、ThreeA(q=2, m=1)、TwoD_even(k=3)"""
        if self.tag == ConfigTag.ZERO:
            return f"{self.tag.value}({self.ade})"
        params = [f"{name}={value}" for name, value in (("q", self.q), ("m", self.m), ("k", self.k)) if value is not None]
        return f"{self.tag.value}({', '.join(params)})" if params else self.tag.value


class CoreTemplate(BaseModel):
    """
    某一类配置在核心上的模板

    顶点按规范顺序编号 0..rank-1：
      A：沿链从一端到另一端
      D：长臂从末端到分支点（含），然后两片叶子 u、w
      E：分支点，然后三条臂（长度 1、2、r）各自由内向外
    """
    model_config = ConfigDict(frozen=True)

    shape: AdeShape
    multiplicities: Tuple[int, ...]
    attachments: Tuple[int, ...]


class RdpConfiguration(BaseModel):
    """一个 RDP 配置；config_class 在分类前为 None"""
    model_config = ConfigDict(frozen=True, populate_by_name=True)

    core_vertices: Tuple[str, ...]
    attached_edges: Tuple[Tuple[str, str], ...]
    ade: AdeShape
    multiplicities: Dict[str, int]
    black_vertices: Tuple[str, ...] = ()
    black_vertex: Optional[str] = None
    s: int = 1
    config_class: Optional[ConfigClass] = Field(default=None, alias="class")

    @property
    def n(self) -> int:
        return len(self.attached_edges)

    @property
    def attachments(self) -> Dict[str, int]:
        counts = {v: 0 for v in self.core_vertices}
        for core_v, _ in self.attached_edges:
            counts[core_v] += 1
        return counts

    @property
    def outside_neighbors(self) -> Tuple[str, ...]:
        return tuple(dict.fromkeys(outside for _, outside in self.attached_edges))

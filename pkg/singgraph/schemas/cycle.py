from typing import Dict, List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from singgraph.schemas.graph import Cycle


class ComputingStep(BaseModel):
    """计算序列中的一步：当前 cycle，被加 1 的顶点（终止步为 None）及其 excess"""
    model_config = ConfigDict(frozen=True)

    cycle: Cycle
    vertex: Optional[str] = None
    excess: int = 0


class ComputingSequence(BaseModel):
    """
    Laufer 计算序列

    steps[0].cycle 是约化 cycle E，最后一步的 vertex 为 None，其 cycle 即基本 cycle Z。
    start_genus = 1 + #边 - #顶点，树时为 0。
    """
    model_config = ConfigDict(frozen=True)

    steps: Tuple[ComputingStep, ...]
    start_genus: int

    @property
    def final(self) -> Cycle:
        return self.steps[-1].cycle

    @property
    def increments(self) -> Tuple[ComputingStep, ...]:
        return self.steps[:-1]


class ScalarInvariants(BaseModel):
    model_config = ConfigDict(frozen=True)

    z: Cycle
    z_self_intersection: int
    pa_z: int
    e: int
    mult: int
    almost_reduced: bool
    laufer_rational: bool
    artin_rational: bool

    @property
    def rational(self) -> bool:
        return self.laufer_rational and self.artin_rational


class IntersectionProfile(BaseModel):
    """Z·E_v 的取值以及黑/白顶点划分（黑：Z·E_v < 0）"""
    model_config = ConfigDict(frozen=True)

    values: Dict[str, int]

    @property
    def black(self) -> List[str]:
        return [v for v, x in self.values.items() if x < 0]

    @property
    def white(self) -> List[str]:
        return [v for v, x in self.values.items() if x == 0]

    def deficit(self, v: str) -> int:
        return -self.values[v]

from enum import Enum
from typing import List, Optional, Tuple

from pydantic import BaseModel, ConfigDict

from singgraph.schemas.correction import CorrectionInterval, DimensionIncrements
from singgraph.schemas.graph import DualGraph


class BlowdownStep(BaseModel):
    """
    Tjurina 收缩的一步

    contracted 为 Z·E_v = 0 的顶点，fibers 为它们诱导子图的连通分量（按最小顶点下标排序，权重继承），
    surviving 为剩下的顶点（Z·E_v < 0），即 blowup 的例外曲线在原图上的像。
    """
    model_config = ConfigDict(frozen=True)

    contracted: Tuple[str, ...]
    fibers: Tuple[DualGraph, ...]
    surviving: Tuple[str, ...]
    fiber_types: Tuple[Optional[str], ...] = ()


class TerminalKind(str, Enum):
    RDP = "rdp"
    SMOOTH = "smooth"


class NodeSummary(BaseModel):
    """塔中一个非 RDP 节点的不变量；无法给出 c 时记录原因"""
    model_config = ConfigDict(frozen=True)

    e: int
    mult: int
    z_self_intersection: int
    pa_z: int
    almost_reduced: bool
    c: Optional[CorrectionInterval] = None
    increments: Optional[DimensionIncrements] = None
    reason: Optional[str] = None


class TowerNode(BaseModel):
    model_config = ConfigDict(frozen=True)

    level: int
    graph: DualGraph
    e: int
    terminal: Optional[TerminalKind] = None
    rdp: Optional[str] = None
    tau: Optional[int] = None
    summary: Optional[NodeSummary] = None
    children: Tuple["TowerNode", ...] = ()


class BlowdownTower(BaseModel):
    model_config = ConfigDict(frozen=True)

    root: TowerNode

    def levels(self) -> List[List[Tuple[Optional[int], TowerNode]]]:
        """按层展开，每个节点带上一层父节点在该层中的下标"""
        result: List[List[Tuple[Optional[int], TowerNode]]] = [[(None, self.root)]]
        while True:
            next_level = []
            for parent_index, (_, node) in enumerate(result[-1]):
                for child in node.children:
                    next_level.append((parent_index, child))
            if not next_level:
                return result
            result.append(next_level)

    @property
    def depth(self) -> int:
        return len(self.levels())


TowerNode.model_rebuild()

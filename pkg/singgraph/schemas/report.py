"""
报告的输出格式

所有可能无法计算的字段都保留在输出中（值为 null），并由同组的 *_reason 字段说明原因。
字段顺序即 JSON 输出顺序，保证输出逐字节稳定。
"""
from typing import Dict, List, Optional

from pydantic import BaseModel, ConfigDict, Field

from singgraph.schemas.graph import GraphDocument


class ToolInfo(BaseModel):
    name: str
    version: str


class StepEntry(BaseModel):
    vertex: str
    excess: int


class ConfigurationEntry(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    core: List[str]
    ade: str
    n: int
    class_: Optional[str] = Field(default=None, alias="class")
    label: Optional[str] = None
    q: Optional[int] = None
    m: Optional[int] = None
    k: Optional[int] = None
    s: int
    black: Optional[str] = None
    black_vertices: List[str]
    attachments: Dict[str, int]
    identity_terms: Dict[str, int]


class IdentityCheck(BaseModel):
    configurations_sum: int
    intersection_value: int
    passed: bool


class IntervalEntry(BaseModel):
    lo: int
    hi: int


class WitnessEntry(BaseModel):
    core: List[str]
    adjacent: Dict[str, int]
    counts_toward_lo: bool


class CorrectionEntry(BaseModel):
    lo: int
    hi: int
    exact: bool
    witnesses: List[WitnessEntry]


class FiberEntry(BaseModel):
    vertices: List[str]
    ade: Optional[str] = None


class BlowdownEntry(BaseModel):
    contracted: List[str]
    surviving: List[str]
    fibers: List[FiberEntry]


class RdpEntry(BaseModel):
    """e = 3 的图：ADE 名和 Tjurina 数 τ（顶点数），超曲面所以 dim T² = 0"""
    model_config = ConfigDict(populate_by_name=True)

    name: Optional[str] = None
    tau: int
    dT2: int = 0


class TowerSummaryEntry(BaseModel):
    e: int
    mult: int
    z_self_intersection: int
    pa_z: int
    almost_reduced: bool
    c: Optional[CorrectionEntry] = None
    dT1: Optional[IntervalEntry] = None
    dT2: Optional[IntervalEntry] = None
    reason: Optional[str] = None


class TowerFiberEntry(BaseModel):
    parent: Optional[int] = None
    graph: GraphDocument
    e: int
    terminal: Optional[str] = None
    rdp: Optional[RdpEntry] = None
    report: Optional[TowerSummaryEntry] = None


class TowerLevel(BaseModel):
    level: int
    fibers: List[TowerFiberEntry]


class HintsEntry(BaseModel):
    three_a_count: int
    n_histogram: Dict[str, int]
    only_one_configurations: bool
    no_three_a: bool


class InvariantReport(BaseModel):
    model_config = ConfigDict(populate_by_name=True)

    tool: ToolInfo
    input_digest: str
    graph: GraphDocument
    negative_definite: bool

    fundamental_cycle: Optional[Dict[str, int]] = None
    computing_sequence: Optional[List[StepEntry]] = None
    z_self_intersection: Optional[int] = None
    pa_z: Optional[int] = None
    e: Optional[int] = None
    mult: Optional[int] = None
    rational: Optional[bool] = None
    almost_reduced: Optional[bool] = None
    intersection_profile: Optional[Dict[str, int]] = None
    black_vertices: Optional[List[str]] = None
    scalars_reason: Optional[str] = None

    configurations: Optional[List[ConfigurationEntry]] = None
    configurations_reason: Optional[str] = None

    h1_A: Optional[int] = None
    identity: Optional[IdentityCheck] = None
    h1_A_reason: Optional[str] = None

    c: Optional[CorrectionEntry] = None
    c_reason: Optional[str] = None
    dT1: Optional[IntervalEntry] = None
    dT2: Optional[IntervalEntry] = None
    increments_reason: Optional[str] = None

    blowdown: Optional[BlowdownEntry] = None
    blowdown_reason: Optional[str] = None
    rdp: Optional[RdpEntry] = None

    tower: Optional[List[TowerLevel]] = None
    tower_reason: Optional[str] = None

    hints: Optional[HintsEntry] = None


class CheckResult(BaseModel):
    """check 命令对每个文件输出的一行"""
    file: str
    status: str
    diagnostic: Optional[str] = None
    message: str

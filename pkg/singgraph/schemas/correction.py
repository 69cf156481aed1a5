from typing import Dict, Tuple

from pydantic import BaseModel, ConfigDict, model_validator


class IntegerInterval(BaseModel):
    """闭区间 [lo, hi]"""
    model_config = ConfigDict(frozen=True)

    lo: int
    hi: int

    @model_validator(mode="after")
    def check_order(self):
        if self.lo > self.hi:
            raise ValueError(f"区间下界 {self.lo} 大于上界 {self.hi}")
        return self

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    def shift(self, offset: int) -> "IntegerInterval":
        return IntegerInterval(lo=self.lo + offset, hi=self.hi + offset)


class CorrectionWitness(BaseModel):
    """一个 ThreeA 配置对 c(X) 的贡献情况"""
    model_config = ConfigDict(frozen=True)

    core_vertices: Tuple[str, ...]
    adjacent: Tuple[str, ...]
    adjacent_profile: Dict[str, int]
    counts_toward_lo: bool


class CorrectionInterval(BaseModel):
    model_config = ConfigDict(frozen=True)

    lo: int
    hi: int
    witnesses: Tuple[CorrectionWitness, ...] = ()

    @property
    def exact(self) -> bool:
        return self.lo == self.hi

    @property
    def interval(self) -> IntegerInterval:
        return IntegerInterval(lo=self.lo, hi=self.hi)


class DimensionIncrements(BaseModel):
    """dT1 = e - 4 + c，dT2 = (e-2)(e-4) + c，c 取区间时结果也是区间"""
    model_config = ConfigDict(frozen=True)

    dt1: IntegerInterval
    dt2: IntegerInterval

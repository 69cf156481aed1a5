"""
错误类型

领域拒绝（DomainError）对应 CLI 退出码 2，内部不变量被破坏（InternalInvariantViolation）对应退出码 3。
code 字段是报告和 check 输出中使用的机器可读诊断名。
"""
import re
from enum import Enum
from typing import Optional


class SinggraphError(Exception):
    """所有 singgraph 错误的基类"""

    code: str = "error"
    exit_status: int = 2

    def __init__(self, message: str = "", code: Optional[str] = None):
        super().__init__(message or self.__class__.__name__)
        self.message = message or self.__class__.__name__
        if code is not None:
            self.code = code


class DomainError(SinggraphError):
    """输入不在某个操作的定义域内"""

    exit_status = 2


class SchemaError(DomainError):
    code = "schema_error"


class ValidationReason(str, Enum):
    SELF_LOOP = "SelfLoop"
    DUPLICATE_EDGE = "DuplicateEdge"
    WEIGHT_ABOVE_MINUS_TWO = "WeightAboveMinusTwo"
    DISCONNECTED = "Disconnected"
    DUPLICATE_ID = "DuplicateId"
    UNKNOWN_VERTEX = "UnknownVertex"
    EMPTY_GRAPH = "EmptyGraph"

    @property
    def code(self) -> str:
        return re.sub(r"(?<!^)(?=[A-Z])", "_", self.value).lower()


class ValidationError(DomainError):
    """图的结构不合法"""

    def __init__(self, reason: ValidationReason, message: str = ""):
        self.reason = reason
        super().__init__(message or reason.value, code=reason.code)


class DomainMismatch(DomainError):
    code = "domain_mismatch"


class NotNegativeDefinite(DomainError):
    code = "not_negative_definite"


class NotRational(DomainError):
    code = "not_rational"


class NotAlmostReduced(DomainError):
    code = "not_almost_reduced"


class MultipleBlackVertices(DomainError):
    code = "multiple_black_vertices"


class NotInCatalog(DomainError):
    code = "not_in_catalog"


class EmbeddingDimensionTooSmall(DomainError):
    code = "embedding_dimension_below_4"


class InvalidParameters(DomainError):
    code = "invalid_parameters"


class UnknownClass(DomainError):
    code = "unknown_class"


class InternalInvariantViolation(SinggraphError):
    """算法内部的交叉校验失败，说明实现有缺陷"""

    code = "internal_invariant_violation"
    exit_status = 3


class CriterionDisagreement(InternalInvariantViolation):
    code = "criterion_disagreement"


class ParityError(InternalInvariantViolation):
    code = "parity_error"


class IdentityViolation(InternalInvariantViolation):
    code = "identity_violation"

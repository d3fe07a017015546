"""
Error types for SchurPos
Every error carries a stable code that reports and the CLI echo back
"""

from typing import Any, Optional, Tuple


class SchurPosError(ValueError):
    """Base class of all domain errors"""

    code = "schurpos"

    def to_dict(self) -> dict:
        return {"error": str(self), "code": self.code}


class PartitionError(SchurPosError):
    code = "invalid-partition"


class SizeMismatchError(SchurPosError):
    code = "size-mismatch"


class CellError(SchurPosError):
    code = "cell-outside-shape"


class CoreError(SchurPosError):
    code = "invalid-core"


class BoundedError(SchurPosError):
    code = "not-k-bounded"


class DegreeLimitError(SchurPosError):
    code = "degree-limit"


class OracleError(SchurPosError):
    code = "too-few-variables"


class UnitriangularityError(SchurPosError):
    code = "unitriangularity"


class PieriError(SchurPosError):
    code = "pieri-degree"


class KSchurError(SchurPosError):
    code = "kschur"


class NotInSubalgebraError(SchurPosError):
    code = "not-in-subalgebra"

    def __init__(self, message: str, offending: Tuple[int, ...]):
        super().__init__(message)
        self.offending = offending

    def to_dict(self) -> dict:
        result = super().to_dict()
        result["offending"] = list(self.offending)
        return result


class EvenPowerSumError(SchurPosError):
    code = "even-p-support"


class GeneratorBoundError(SchurPosError):
    code = "generator-bound-exceeded"


class NonIntegralExpansionError(SchurPosError):
    code = "non-integral-expansion"


class NotSymmetricError(SchurPosError):
    code = "not-symmetric"

    def __init__(self, message: str, witness: Tuple[Any, Any]):
        super().__init__(message)
        self.witness = witness

    def to_dict(self) -> dict:
        result = super().to_dict()
        result["witness"] = [list(self.witness[0]), list(self.witness[1])]
        return result


class PresentationError(SchurPosError):
    code = "malformed-presentation"


class ParseError(SchurPosError):
    code = "parse-error"


def error_dict(exc: Exception, context: Optional[str] = None) -> dict:
    """Turn any exception into the {"error": ...} dict used by reports"""
    if isinstance(exc, SchurPosError):
        result = exc.to_dict()
    else:
        result = {"error": f"{type(exc).__name__}: {exc}", "code": "internal"}
    if context:
        result["context"] = context
    return result

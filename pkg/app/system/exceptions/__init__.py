from app.system.exceptions.base_exception import BaseHTTPException, ServiceLimitError
from app.system.exceptions.domain_exception import (
    BiquadError,
    DegenerateTraceError,
    InternalInvariantError,
    PointAtInfinityError,
    SingularCurveError,
    UnknownVariableError,
    UsageError,
    VerificationError,
)
from app.system.exceptions.api_exception_handler import common_exception_handler, domain_exception_handler

__all__ = [
    "BaseHTTPException",
    "BiquadError",
    "DegenerateTraceError",
    "InternalInvariantError",
    "PointAtInfinityError",
    "ServiceLimitError",
    "SingularCurveError",
    "UnknownVariableError",
    "UsageError",
    "VerificationError",
    "common_exception_handler",
    "domain_exception_handler",
]

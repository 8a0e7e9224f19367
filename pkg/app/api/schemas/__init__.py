from app.api.schemas.quartet import (
    AuditCheckResponse,
    AuditResponse,
    CoincidenceResponse,
    NumericCheckResponse,
    QuartetResponse,
    SearchResponse,
    TorsionResponse,
)

__all__ = [
    "AuditCheckResponse",
    "AuditResponse",
    "CoincidenceResponse",
    "NumericCheckResponse",
    "QuartetResponse",
    "SearchResponse",
    "TorsionResponse",
]

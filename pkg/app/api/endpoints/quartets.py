import logging

from fastapi import APIRouter, Depends, Query

from app.api.deps import get_use_case
from app.api.schemas.quartet import (
    AuditResponse,
    NumericCheckResponse,
    QuartetResponse,
    SearchResponse,
    TorsionResponse,
)
from app.core.use_case import QuartetUseCase
from app.system.exceptions import ServiceLimitError, VerificationError

logger = logging.getLogger(__name__)
quartets_router = APIRouter()

SEARCH_LIMIT_CAP = 2000


@quartets_router.get("/quartets/{n}", response_model=QuartetResponse)
def get_quartet(n: int, use_case: QuartetUseCase = Depends(get_use_case)):
    return QuartetResponse.from_quartet(use_case.derive(n))


@quartets_router.get("/quartets/{n}/eval", response_model=NumericCheckResponse)
def evaluate_quartet(
    n: int,
    p: int = Query(..., description="p in t = p/q"),
    q: int = Query(..., description="q in t = p/q"),
    use_case: QuartetUseCase = Depends(get_use_case),
):
    _, check = use_case.evaluate(n, p, q)
    if not check.degenerate and not check.equal:
        raise VerificationError(f"A^4 + B^4 != C^4 + D^4 at (p, q) = ({p}, {q})")
    return NumericCheckResponse.from_check(n, check)


@quartets_router.get("/audit", response_model=AuditResponse)
def audit(use_case: QuartetUseCase = Depends(get_use_case)):
    return AuditResponse.from_report(use_case.audit())


@quartets_router.get("/search", response_model=SearchResponse)
def search(
    limit: int = Query(..., ge=1),
    use_case: QuartetUseCase = Depends(get_use_case),
):
    if limit > SEARCH_LIMIT_CAP:
        logger.warning(f"search limit {limit} rejected")
        raise ServiceLimitError("limit", limit, SEARCH_LIMIT_CAP)
    return SearchResponse.from_coincidences(limit, use_case.search(limit))


@quartets_router.get("/torsion", response_model=TorsionResponse)
def torsion(
    bound: int | None = Query(None, ge=1),
    use_case: QuartetUseCase = Depends(get_use_case),
):
    return TorsionResponse.from_report(use_case.torsion(bound))

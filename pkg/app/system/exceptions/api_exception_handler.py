from fastapi import Request
from fastapi.responses import JSONResponse

from app.system.exceptions.base_exception import BaseHTTPException
from app.system.exceptions.domain_exception import BiquadError


async def common_exception_handler(request: Request, exc: BaseHTTPException) -> JSONResponse:
    return JSONResponse(
        status_code=exc.status_code,
        content={"detail": exc.detail, "path": str(request.url)}
    )


async def domain_exception_handler(request: Request, exc: BiquadError) -> JSONResponse:
    return JSONResponse(
        status_code=exc.status_code,
        content={"code": exc.code, "detail": exc.message, "path": str(request.url)}
    )

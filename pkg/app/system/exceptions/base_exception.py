from fastapi import HTTPException


class BaseHTTPException(HTTPException):
    def __init__(self, status_code: int, detail: str):
        super().__init__(status_code=status_code, detail=detail)


class ServiceLimitError(BaseHTTPException):
    """A request parameter exceeds what the HTTP service will compute inline."""

    def __init__(self, name: str, value: int, cap: int):
        super().__init__(status_code=400, detail=f"{name} is capped at {cap} for the service, got {value}")

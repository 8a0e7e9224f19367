from app.system.exceptions import BaseHTTPException, BiquadError, common_exception_handler, domain_exception_handler

__all__ = ["BaseHTTPException", "BiquadError", "common_exception_handler", "domain_exception_handler"]

from app.api.api import api_router

__all__ = ["api_router"]

from app.api.endpoints.quartets import quartets_router

__all__ = ["quartets_router"]

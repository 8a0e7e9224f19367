from fastapi import APIRouter

from app.api.endpoints.quartets import quartets_router

api_router = APIRouter()

api_router.include_router(quartets_router, tags=["quartets"])

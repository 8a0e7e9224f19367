from app.storages.quartet_storage import QuartetStorage

__all__ = ["QuartetStorage"]

from app.config.settings import settings
from app.config.logging_config import setup_logging

__all__ = ["settings", "setup_logging"]

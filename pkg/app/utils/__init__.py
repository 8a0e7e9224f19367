from app.utils.logger import DerivationLogger

__all__ = ["DerivationLogger"]

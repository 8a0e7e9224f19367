from app.core.engine import DerivationEngine
from app.core.models import Quartet
from app.core.use_case import QuartetUseCase

__all__ = ["DerivationEngine", "Quartet", "QuartetUseCase"]

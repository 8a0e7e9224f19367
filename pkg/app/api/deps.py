import threading

from app.core.engine import DerivationEngine
from app.core.use_case import QuartetUseCase
from app.storages.quartet_storage import QuartetStorage

_engine: DerivationEngine | None = None
_storage: QuartetStorage | None = None
_use_case: QuartetUseCase | None = None
# sync routes run in a threadpool; first requests may race here
_init_lock = threading.RLock()


def get_engine() -> DerivationEngine:
    global _engine
    with _init_lock:
        if _engine is None:
            _engine = DerivationEngine()
        return _engine


def get_storage() -> QuartetStorage:
    global _storage
    with _init_lock:
        if _storage is None:
            _storage = QuartetStorage()
        return _storage


def get_use_case() -> QuartetUseCase:
    global _use_case
    with _init_lock:
        if _use_case is None:
            _use_case = QuartetUseCase(get_engine(), get_storage())
        return _use_case

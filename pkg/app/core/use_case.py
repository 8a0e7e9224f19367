import threading
from typing import Dict

from app.core.engine import DerivationEngine
from app.core.models import AuditReport, Coincidence, NumericCheck, Quartet, TorsionReport
from app.storages.quartet_storage import QuartetStorage
from app.utils.logger import DerivationLogger


class QuartetUseCase:
    """Per-command entry points; every call gets its own trace spawned from the engine's logger."""

    def __init__(self, engine: DerivationEngine, storage: QuartetStorage):
        self.engine = engine
        self.storage = storage
        self._guard = threading.Lock()
        self._fill_locks: Dict[int, threading.Lock] = {}

    def derive(self, n: int, trace: DerivationLogger | None = None) -> Quartet:
        trace = trace or self.engine.logger.spawn(f"derive {n}")
        return self._quartet(n, trace)

    def evaluate(self, n: int, p: int, q: int, trace: DerivationLogger | None = None) -> tuple[Quartet, NumericCheck]:
        trace = trace or self.engine.logger.spawn(f"eval {n} {p} {q}")
        quartet = self._quartet(n, trace)
        return quartet, self.engine.evaluate(quartet, p, q, trace=trace)

    def audit(self, corrupt: str | None = None, trace: DerivationLogger | None = None) -> AuditReport:
        trace = trace or self.engine.logger.spawn("audit")
        return self.engine.audit(corrupt=corrupt, trace=trace)

    def search(
        self, limit: int, workers: int | None = None, trace: DerivationLogger | None = None
    ) -> list[Coincidence]:
        trace = trace or self.engine.logger.spawn(f"search {limit}")
        return self.engine.search(limit, workers, trace=trace)

    def torsion(self, bound: int | None = None, trace: DerivationLogger | None = None) -> TorsionReport:
        trace = trace or self.engine.logger.spawn("torsion")
        return self.engine.torsion(bound, trace=trace)

    def _fill_lock(self, n: int) -> threading.Lock:
        with self._guard:
            return self._fill_locks.setdefault(n, threading.Lock())

    def _quartet(self, n: int, trace: DerivationLogger) -> Quartet:
        self.engine.check_range(n)
        # one derivation per n; concurrent callers wait for the first and reuse it
        with self._fill_lock(n):
            quartet = self.storage.get(n)
            if quartet is None:
                quartet = self.engine.derive(n, trace=trace)
                self.storage.save(n, quartet)
                return quartet
        trace.log("System", f"quartet of {n}P loaded from cache")
        return quartet

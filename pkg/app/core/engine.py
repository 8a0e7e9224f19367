import threading
from typing import Dict

from app.config.settings import settings
from app.core.ecff import CurvePoint, ec_add, nontorsion_heuristic, on_curve
from app.core.models import AuditReport, Coincidence, FamilyReport, NumericCheck, Quartet, TorsionReport
from app.core.pipeline import (
    audit_symbolic,
    base_point,
    biquadrate_curve,
    quartet_from_trace,
    trace_from_point,
)
from app.core.verify import (
    brute_force_pairs,
    coprime_samples,
    cross_check_family,
    numeric_check,
    symbolic_identity,
)
from app.system.exceptions import InternalInvariantError, UsageError, VerificationError
from app.utils.logger import DerivationLogger


class DerivationEngine:
    """Runs the curve -> multiple -> quartet chain stage by stage, logging each step.

    One engine may serve concurrent commands. Each command passes its own
    ``trace``; ``self.logger`` is only the fallback and the template traces
    are spawned from.
    """

    def __init__(self, max_n: int | None = None, logger: DerivationLogger | None = None):
        self.max_n = settings.MAX_N if max_n is None else max_n
        self.logger = logger or DerivationLogger(log_dir=settings.LOG_DIR, persist=settings.SAVE_TRACE_LOG)
        self.curve = biquadrate_curve()
        self.base = base_point()
        if not on_curve(self.curve, self.base):
            raise InternalInvariantError("the base point does not lie on the curve")
        self._multiples: Dict[int, CurvePoint] = {1: self.base}
        self._multiples_lock = threading.Lock()
        self.logger.log("Curve", str(self.curve))

    def check_range(self, n: int) -> None:
        if n < 1:
            raise UsageError(f"the multiple n must be positive, got {n}")
        if n > self.max_n:
            raise UsageError(f"n = {n} exceeds the configured maximum {self.max_n} (raise it with --max-n)")

    def multiple(self, n: int, trace: DerivationLogger | None = None) -> CurvePoint:
        """nP, built by repeated addition from the largest cached multiple below n."""
        trace = trace or self.logger
        with self._multiples_lock:
            if n in self._multiples:
                return self._multiples[n]
            start = max(k for k in self._multiples if k < n)
            point = self._multiples[start]
            for k in range(start + 1, n + 1):
                point = ec_add(self.curve, point, self.base)
                self._multiples[k] = point
                if not point.is_infinity:
                    trace.log("GroupLaw", f"{k}P computed", {"deg_X": point.x.degree})
            return point

    def derive(self, n: int, trace: DerivationLogger | None = None) -> Quartet:
        trace = trace or self.logger
        self.check_range(n)

        with trace.timed("GroupLaw", f"multiple_{n}"):
            point = self.multiple(n, trace)

        with trace.timed("Birational", f"trace_{n}"):
            steps = trace_from_point(point, n)
        trace.log("Substitution", f"x of {n}P has degree {steps.x.degree}")

        with trace.timed("Normalize", f"quartet_{n}"):
            quartet = quartet_from_trace(steps)
        trace.log(
            "Normalize",
            f"degree {quartet.degree} quartet",
            {"removed_content": quartet.removed_content, "removed_gcd_degree": quartet.removed_gcd_degree},
        )
        trace.log_metric("degree", quartet.degree)

        with trace.timed("Verify", f"identity_{n}"):
            holds = symbolic_identity(quartet)
        if not holds:
            trace.log("Verify", f"identity fails for {n}P")
            raise VerificationError(f"the quartet of {n}P does not satisfy A^4 + B^4 = C^4 + D^4")
        trace.log("Verify", f"A^4 + B^4 - C^4 - D^4 vanishes for {n}P", {"trivial": quartet.trivial})

        with trace.timed("Verify", f"cross_check_{n}"):
            self.cross_check(quartet, trace=trace)
        return quartet

    def evaluate(self, quartet: Quartet, p: int, q: int, trace: DerivationLogger | None = None) -> NumericCheck:
        trace = trace or self.logger
        check = numeric_check(quartet, p, q)
        trace.log("Verify", f"numeric check at (p, q) = ({p}, {q})", {"equal": check.equal, "degenerate": check.degenerate})
        return check

    def cross_check(
        self, quartet: Quartet, bound: int | None = None, trace: DerivationLogger | None = None
    ) -> FamilyReport:
        """Evaluate the quartet at every coprime p > q >= 1 with p <= bound."""
        trace = trace or self.logger
        report = cross_check_family(quartet, coprime_samples(settings.SAMPLE_BOUND if bound is None else bound))
        trace.log("Verify", f"{len(report.checks)} samples, {len(report.failures)} failures")
        trace.log_metric("samples", len(report.checks))
        trace.log_metric("degenerate_samples", report.degenerate)
        if not report.passed:
            failure = report.failures[0]
            raise VerificationError(
                f"numeric cross-check of {quartet.source}P failed at {len(report.failures)} samples, "
                f"first at (p, q) = ({failure.p}, {failure.q})"
            )
        return report

    def audit(self, corrupt: str | None = None, trace: DerivationLogger | None = None) -> AuditReport:
        trace = trace or self.logger
        with trace.timed("Audit", "audit"):
            report = audit_symbolic(corrupt=corrupt)
        for check in report.checks:
            trace.log("Audit", f"({check.index}) {check.name}: {'pass' if check.passed else 'FAIL'}")
        return report

    def search(
        self, limit: int, workers: int | None = None, trace: DerivationLogger | None = None
    ) -> list[Coincidence]:
        trace = trace or self.logger
        with trace.timed("Search", f"search_{limit}"):
            found = brute_force_pairs(limit, settings.SEARCH_WORKERS if workers is None else workers)
        trace.log("Search", f"{len(found)} coincidences up to {limit}")
        return found

    def torsion(self, bound: int | None = None, trace: DerivationLogger | None = None) -> TorsionReport:
        trace = trace or self.logger
        bound = settings.TORSION_BOUND if bound is None else bound
        if bound < 1:
            raise UsageError(f"bound must be at least 1, got {bound}")
        report = nontorsion_heuristic(self.curve, self.base, bound)
        trace.log("GroupLaw", f"deg X(nP) for n <= {bound}: {list(report.x_degrees)}", {"note": report.note})
        return report

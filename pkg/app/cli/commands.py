"""Command handlers: run a use case call and fold the outcome into a CommandResult."""
import logging
from typing import Callable

from app.api.schemas.quartet import (
    AuditResponse,
    NumericCheckResponse,
    QuartetResponse,
    SearchResponse,
    TorsionResponse,
)
from app.cli.schemas import CommandError, CommandResult
from app.core.use_case import QuartetUseCase
from app.system.exceptions import BiquadError, VerificationError

logger = logging.getLogger(__name__)


def _guarded(command: str, body: Callable[[], CommandResult]) -> CommandResult:
    try:
        return body()
    except BiquadError as exc:
        logger.debug("%s failed with %s", command, exc.code)
        return CommandResult(
            command=command,
            status="failure",
            exit_code=exc.exit_code,
            error=CommandError(code=exc.code, message=exc.message),
        )


def cmd_derive(use_case: QuartetUseCase, n: int) -> CommandResult:
    def body() -> CommandResult:
        quartet = use_case.derive(n)
        return CommandResult(command="derive", payload=QuartetResponse.from_quartet(quartet).model_dump())

    return _guarded("derive", body)


def cmd_eval(use_case: QuartetUseCase, n: int, p: int, q: int) -> CommandResult:
    def body() -> CommandResult:
        _, check = use_case.evaluate(n, p, q)
        payload = NumericCheckResponse.from_check(n, check).model_dump()
        if check.degenerate:
            return CommandResult(
                command="eval",
                payload=payload,
                warnings=[f"(p, q) = ({p}, {q}) is a degenerate sample: p^8 = q^8 or a value vanishes"],
            )
        if not check.equal:
            error = VerificationError(f"A^4 + B^4 != C^4 + D^4 at (p, q) = ({p}, {q})")
            return CommandResult(
                command="eval",
                status="failure",
                exit_code=error.exit_code,
                payload=payload,
                error=CommandError(code=error.code, message=error.message),
            )
        return CommandResult(command="eval", payload=payload)

    return _guarded("eval", body)


def cmd_audit(use_case: QuartetUseCase, corrupt: str | None = None) -> CommandResult:
    def body() -> CommandResult:
        report = use_case.audit(corrupt=corrupt)
        if report.passed:
            return CommandResult(command="audit", payload=AuditResponse.from_report(report).model_dump())
        error = VerificationError(f"audit checks failed: {', '.join(report.failed)}")
        return CommandResult(
            command="audit",
            status="failure",
            exit_code=error.exit_code,
            payload=AuditResponse.from_report(report).model_dump(),
            error=CommandError(code=error.code, message=error.message),
        )

    return _guarded("audit", body)


def cmd_search(use_case: QuartetUseCase, limit: int, workers: int | None = None) -> CommandResult:
    def body() -> CommandResult:
        found = use_case.search(limit, workers)
        return CommandResult(
            command="search",
            payload=SearchResponse.from_coincidences(limit, found).model_dump(),
        )

    return _guarded("search", body)


def cmd_torsion(use_case: QuartetUseCase, bound: int | None = None) -> CommandResult:
    def body() -> CommandResult:
        report = use_case.torsion(bound)
        warnings = [] if report.passed else ["degree growth does not look like a point of infinite order"]
        return CommandResult(command="torsion", payload=TorsionResponse.from_report(report).model_dump(), warnings=warnings)

    return _guarded("torsion", body)

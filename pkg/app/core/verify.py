"""Independent checks: exact symbolic identity, integer spot checks, brute force."""
import heapq
import logging
from concurrent.futures import ProcessPoolExecutor
from functools import partial
from math import gcd
from typing import Iterable

from app.core.models import Coincidence, FamilyReport, NumericCheck, Quartet
from app.system.exceptions import UsageError, VerificationError

logger = logging.getLogger(__name__)


def symbolic_identity(q: Quartet) -> bool:
    residual = q.A ** 4 + q.B ** 4 - q.C ** 4 - q.D ** 4
    return residual.is_zero


def numeric_check(q: Quartet, p: int, q_val: int) -> NumericCheck:
    values = tuple(form(p, q_val) for form in q.forms)
    a, b, c, d = values
    left_sum = a ** 4 + b ** 4
    right_sum = c ** 4 + d ** 4
    return NumericCheck(
        p=p,
        q=q_val,
        values=values,
        left_sum=left_sum,
        right_sum=right_sum,
        equal=left_sum == right_sum,
        degenerate=p ** 8 == q_val ** 8 or 0 in values,
    )


def _sums_for_partition(limit: int, offset: int, stride: int) -> list[tuple[int, int, int]]:
    """Sorted (a^4 + b^4, a, b) for every a congruent to offset mod stride."""
    sums = [
        (a ** 4 + b ** 4, a, b)
        for a in range(1 + offset, limit + 1, stride)
        for b in range(a, limit + 1)
    ]
    sums.sort()
    return sums


def _scan(sorted_sums: Iterable[tuple[int, int, int]]) -> list[Coincidence]:
    found: list[Coincidence] = []
    group: list[tuple[int, int]] = []
    current = None
    for total, a, b in sorted_sums:
        if total != current:
            group, current = [], total
        for c, d in group:
            found.append(Coincidence(sum=total, a=c, b=d, c=a, d=b))
        group.append((a, b))
    return found


def _reverify(coincidence: Coincidence) -> Coincidence:
    left = coincidence.a ** 4 + coincidence.b ** 4
    right = coincidence.c ** 4 + coincidence.d ** 4
    if left != right or left != coincidence.sum:
        raise VerificationError(f"enumerated coincidence {coincidence} failed re-verification")
    return coincidence


def brute_force_pairs(limit: int, workers: int = 1) -> list[Coincidence]:
    """Every a^4 + b^4 = c^4 + d^4 with all terms in 1..limit, sorted by sum."""
    if limit < 1:
        raise UsageError(f"limit must be at least 1, got {limit}")
    if workers < 1:
        raise UsageError(f"workers must be at least 1, got {workers}")

    stride = min(workers, limit)
    if stride == 1:
        merged = _sums_for_partition(limit, 0, 1)
    else:
        job = partial(_sums_for_partition, limit, stride=stride)
        with ProcessPoolExecutor(max_workers=stride) as pool:
            partitions = list(pool.map(job, range(stride)))
        merged = heapq.merge(*partitions)

    found = sorted(_reverify(coincidence) for coincidence in _scan(merged))
    logger.info("limit %d: %d coincidences across %d partitions", limit, len(found), stride)
    return found


def coprime_samples(bound: int) -> list[tuple[int, int]]:
    return [
        (p, q)
        for p in range(2, bound + 1)
        for q in range(1, p)
        if gcd(p, q) == 1
    ]


def cross_check_family(q: Quartet, samples: Iterable[tuple[int, int]]) -> FamilyReport:
    checks = tuple(numeric_check(q, p, q_val) for p, q_val in samples)
    failures = tuple(check for check in checks if not check.degenerate and not check.equal)
    for failure in failures:
        logger.error("numeric mismatch at (p, q) = (%d, %d)", failure.p, failure.q)
    return FamilyReport(checks=checks, failures=failures)


__all__ = [
    "brute_force_pairs",
    "coprime_samples",
    "cross_check_family",
    "numeric_check",
    "symbolic_identity",
]

from typing import Dict, List

from pydantic import BaseModel

from app.core.models import AuditReport, Coincidence, NumericCheck, Quartet, TorsionReport
from app.core.pipeline import factored_labels


class QuartetResponse(BaseModel):
    n: int | None
    degree: int
    trivial: bool
    coefficients: Dict[str, List[str]]
    factored: Dict[str, str] | None = None
    removed_content: str
    removed_gcd_degree: int

    @classmethod
    def from_quartet(cls, quartet: Quartet) -> "QuartetResponse":
        return cls(
            n=quartet.source,
            degree=quartet.degree,
            trivial=quartet.trivial,
            coefficients={
                name: [str(c) for c in form.coefficients]
                for name, form in zip("ABCD", quartet.forms)
            },
            factored=factored_labels(quartet),
            removed_content=str(quartet.removed_content),
            removed_gcd_degree=quartet.removed_gcd_degree,
        )


class NumericCheckResponse(BaseModel):
    n: int
    p: int
    q: int
    values: Dict[str, str]
    sums: Dict[str, str]
    equal: bool
    degenerate: bool

    @classmethod
    def from_check(cls, n: int, check: NumericCheck) -> "NumericCheckResponse":
        return cls(
            n=n,
            p=check.p,
            q=check.q,
            values={name: str(value) for name, value in zip("ABCD", check.values)},
            sums={"left": str(check.left_sum), "right": str(check.right_sum)},
            equal=check.equal,
            degenerate=check.degenerate,
        )


class AuditCheckResponse(BaseModel):
    index: int
    name: str
    passed: bool
    residual: str


class AuditResponse(BaseModel):
    checks: List[AuditCheckResponse]
    passed: bool

    @classmethod
    def from_report(cls, report: AuditReport) -> "AuditResponse":
        return cls(
            checks=[
                AuditCheckResponse(index=c.index, name=c.name, passed=c.passed, residual=c.residual)
                for c in report.checks
            ],
            passed=report.passed,
        )


class CoincidenceResponse(BaseModel):
    sum: str
    a: int
    b: int
    c: int
    d: int


class SearchResponse(BaseModel):
    limit: int
    coincidences: List[CoincidenceResponse]

    @classmethod
    def from_coincidences(cls, limit: int, found: List[Coincidence]) -> "SearchResponse":
        return cls(
            limit=limit,
            coincidences=[
                CoincidenceResponse(sum=str(c.sum), a=c.a, b=c.b, c=c.c, d=c.d) for c in found
            ],
        )


class TorsionResponse(BaseModel):
    bound: int
    torsion_order: int | None
    x_degrees: List[int]
    nondecreasing: bool
    eventually_increasing: bool
    passed: bool
    note: str

    @classmethod
    def from_report(cls, report: TorsionReport) -> "TorsionResponse":
        return cls(
            bound=report.bound,
            torsion_order=report.torsion_order,
            x_degrees=list(report.x_degrees),
            nondecreasing=report.nondecreasing,
            eventually_increasing=report.eventually_increasing,
            passed=report.passed,
            note=report.note,
        )

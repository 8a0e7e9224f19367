from dataclasses import dataclass, field

from app.core.polycore import HomBiPoly, RatFunc
from app.system.exceptions import InternalInvariantError


@dataclass(frozen=True)
class SubstCoeffs:
    a0: RatFunc
    a1: RatFunc
    a2: RatFunc
    b0: RatFunc
    b1: RatFunc
    b2: RatFunc

    def __post_init__(self):
        if self.a1 != self.b0 ** 3 or self.b1 != -self.a0 ** 3:
            raise InternalInvariantError("coefficients must satisfy a1 = b0^3 and b1 = -a0^3")


@dataclass(frozen=True)
class PipelineTrace:
    n: int
    u: RatFunc
    v: RatFunc
    x: RatFunc
    coeffs: SubstCoeffs

    def __post_init__(self):
        t = RatFunc.variable()
        u = self.u
        if self.v ** 2 != (3 * u ** 2 - 3 * u + 1) * ((1 - t ** 8) * u - 1):
            raise InternalInvariantError(f"trace of {self.n}P is off the (u, v) curve")


@dataclass(frozen=True)
class Quartet:
    """Forms with A^4 + B^4 = C^4 + D^4; the identity is checked by the verifier."""

    A: HomBiPoly
    B: HomBiPoly
    C: HomBiPoly
    D: HomBiPoly
    degree: int
    trivial: bool = False
    source: int | None = None
    removed_content: int = 1
    removed_gcd_degree: int = 0

    def __post_init__(self):
        if any(form.degree != self.degree for form in self.forms):
            raise InternalInvariantError("quartet forms must share one degree")

    @property
    def forms(self) -> tuple[HomBiPoly, HomBiPoly, HomBiPoly, HomBiPoly]:
        return self.A, self.B, self.C, self.D


@dataclass(frozen=True)
class AuditCheck:
    index: int
    name: str
    passed: bool
    residual: str


@dataclass(frozen=True)
class AuditReport:
    checks: tuple[AuditCheck, ...]

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def failed(self) -> list[str]:
        return [check.name for check in self.checks if not check.passed]


@dataclass(frozen=True)
class NumericCheck:
    p: int
    q: int
    values: tuple[int, int, int, int]
    left_sum: int
    right_sum: int
    equal: bool
    degenerate: bool


@dataclass(frozen=True, order=True)
class Coincidence:
    sum: int
    a: int
    b: int
    c: int
    d: int

    def __post_init__(self):
        if not (self.a <= self.b and self.c <= self.d and (self.a, self.b) < (self.c, self.d)):
            raise InternalInvariantError(f"pairs {(self.a, self.b)} and {(self.c, self.d)} are not canonical")
        if self.a ** 4 + self.b ** 4 != self.sum or self.c ** 4 + self.d ** 4 != self.sum:
            raise InternalInvariantError(f"{self} is not an equal sum of fourth powers")

    def __str__(self) -> str:
        return f"{self.a}^4 + {self.b}^4 = {self.c}^4 + {self.d}^4 = {self.sum}"


@dataclass(frozen=True)
class FamilyReport:
    checks: tuple[NumericCheck, ...]
    failures: tuple[NumericCheck, ...] = field(default=())

    @property
    def passed(self) -> bool:
        return not self.failures

    @property
    def degenerate(self) -> int:
        return sum(check.degenerate for check in self.checks)


@dataclass(frozen=True)
class TorsionReport:
    bound: int
    torsion_order: int | None
    x_degrees: tuple[int, ...]
    nondecreasing: bool
    eventually_increasing: bool
    note: str

    @property
    def passed(self) -> bool:
        return self.torsion_order is None and self.nondecreasing and self.eventually_increasing

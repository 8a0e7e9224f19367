"""Affine Weierstrass curves Y^2 = X^3 + a2 X^2 + a4 X + a6 over Q(t)."""
import logging
from dataclasses import dataclass

from app.core.models import TorsionReport
from app.core.polycore import RatFunc
from app.system.exceptions import InternalInvariantError, SingularCurveError

logger = logging.getLogger(__name__)

HEURISTIC_NOTE = "heuristic evidence only, not a proof of infinite order"


@dataclass(frozen=True)
class Curve:
    a2: RatFunc
    a4: RatFunc
    a6: RatFunc

    def __post_init__(self):
        if not self.discriminant:
            raise SingularCurveError(f"the cubic of {self} has a repeated root")

    @property
    def discriminant(self) -> RatFunc:
        a2, a4, a6 = self.a2, self.a4, self.a6
        return (
            a2 ** 2 * a4 ** 2
            - 4 * a4 ** 3
            - 4 * a2 ** 3 * a6
            + 18 * a2 * a4 * a6
            - 27 * a6 ** 2
        )

    def rhs(self, x: RatFunc) -> RatFunc:
        return ((x + self.a2) * x + self.a4) * x + self.a6

    def __str__(self) -> str:
        return f"Y^2 = X^3 + ({self.a2})X^2 + ({self.a4})X + ({self.a6})"


@dataclass(frozen=True)
class CurvePoint:
    x: RatFunc | None = None
    y: RatFunc | None = None

    def __post_init__(self):
        if (self.x is None) != (self.y is None):
            raise InternalInvariantError("a curve point needs both coordinates or neither")

    @property
    def is_infinity(self) -> bool:
        return self.x is None

    def __str__(self) -> str:
        return "O" if self.is_infinity else f"({self.x}, {self.y})"


INFINITY = CurvePoint()


def on_curve(c: Curve, pt: CurvePoint) -> bool:
    if pt.is_infinity:
        return True
    return not (pt.y ** 2 - c.rhs(pt.x))


def ec_negate(pt: CurvePoint) -> CurvePoint:
    if pt.is_infinity:
        return pt
    return CurvePoint(pt.x, -pt.y)


def ec_double(c: Curve, pt: CurvePoint) -> CurvePoint:
    if pt.is_infinity or not pt.y:
        return INFINITY
    x, y = pt.x, pt.y
    slope = (3 * x ** 2 + 2 * c.a2 * x + c.a4) / (2 * y)
    x3 = slope ** 2 - c.a2 - 2 * x
    return CurvePoint(x3, slope * (x - x3) - y)


def ec_add(c: Curve, pt1: CurvePoint, pt2: CurvePoint) -> CurvePoint:
    if pt1.is_infinity:
        return pt2
    if pt2.is_infinity:
        return pt1
    if pt1.x == pt2.x:
        if pt1.y == -pt2.y:
            return INFINITY
        if pt1.y == pt2.y:
            return ec_double(c, pt1)
        raise InternalInvariantError("points share X but their Y are neither equal nor opposite")
    slope = (pt2.y - pt1.y) / (pt2.x - pt1.x)
    x3 = slope ** 2 - c.a2 - pt1.x - pt2.x
    return CurvePoint(x3, slope * (pt1.x - x3) - pt1.y)


def ec_scalar_mul(c: Curve, n: int, pt: CurvePoint) -> CurvePoint:
    if n < 0:
        return ec_scalar_mul(c, -n, ec_negate(pt))
    result, addend = INFINITY, pt
    while n:
        if n & 1:
            result = ec_add(c, result, addend)
        n >>= 1
        if n:
            addend = ec_double(c, addend)
    return result


def _increasing_tail(degrees: list[int]) -> int:
    """Length of the longest strictly increasing suffix."""
    if not degrees:
        return 0
    length = 1
    for earlier, later in zip(reversed(degrees[:-1]), reversed(degrees[1:])):
        if earlier >= later:
            break
        length += 1
    return length


def nontorsion_heuristic(c: Curve, pt: CurvePoint, bound: int, min_tail: int = 3) -> TorsionReport:
    """Walk nP for n = 1..bound and watch the X-degree grow."""
    degrees: list[int] = []
    current = INFINITY
    for n in range(1, bound + 1):
        current = ec_add(c, current, pt)
        if current.is_infinity:
            logger.info("torsion detected: %d * P is the point at infinity", n)
            return TorsionReport(
                bound=bound,
                torsion_order=n,
                x_degrees=tuple(degrees),
                nondecreasing=False,
                eventually_increasing=False,
                note=HEURISTIC_NOTE,
            )
        degrees.append(current.x.degree)
        logger.debug("deg X(%dP) = %d", n, degrees[-1])

    nondecreasing = all(a <= b for a, b in zip(degrees, degrees[1:]))
    return TorsionReport(
        bound=bound,
        torsion_order=None,
        x_degrees=tuple(degrees),
        nondecreasing=nondecreasing,
        eventually_increasing=_increasing_tail(degrees) >= min(min_tail, bound),
        note=HEURISTIC_NOTE,
    )

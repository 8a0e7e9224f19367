"""From points on the quartic-derived curve back to quartets (A, B, C, D).

Chain: (X, Y) -> (u, v) -> x -> (a0, a1, a2, b0, b1, b2) -> (A, B, C, D),
then t = p/q and normalization to primitive integer forms.
"""
import logging
from dataclasses import replace

from app.core.ecff import Curve, CurvePoint, ec_scalar_mul
from app.core.models import AuditCheck, AuditReport, PipelineTrace, Quartet, SubstCoeffs
from app.core.polycore import (
    P,
    P_FORM,
    Q,
    Q_FORM,
    HomBiPoly,
    RatFunc,
    homogenize,
    mpoly_substitute,
    multi_ring,
    quartet_normalize,
    to_field,
)
from app.core.verify import symbolic_identity
from app.system.exceptions import (
    DegenerateTraceError,
    PointAtInfinityError,
    UsageError,
    VerificationError,
)

logger = logging.getLogger(__name__)

t = RatFunc.variable()
S8 = t ** 8 - 1

# gauge: b0 = 1, a0 = b0 * t
B0 = RatFunc.constant(1)
A0 = B0 * t


def biquadrate_curve() -> Curve:
    return Curve(
        a2=3 * (t ** 8 + 1),
        a4=3 * t ** 16 + 3 * t ** 8 + 3,
        a6=RatFunc.constant(0),
    )


def base_point() -> CurvePoint:
    return CurvePoint(
        (t ** 4 - t ** 2 + 1) * (t ** 8 - t ** 4 + 1) / t ** 2,
        (t ** 18 + t ** 12 + t ** 6 + 1) / t ** 3,
    )


def uv_from_point(pt: CurvePoint) -> tuple[RatFunc, RatFunc]:
    if pt.is_infinity:
        raise PointAtInfinityError("the point at infinity has no (u, v) preimage")
    return -(pt.x + 3) / (3 * S8), pt.y / (3 * S8)


def point_from_uv(u: RatFunc, v: RatFunc) -> CurvePoint:
    return CurvePoint(3 * (1 - t ** 8) * u - 3, 3 * v * S8)


def x_from_uv(u: RatFunc, v: RatFunc) -> RatFunc:
    denominator = S8 * u + 1
    if not denominator:
        raise DegenerateTraceError("(t^8 - 1)u + 1 vanishes identically")
    return v * S8 * B0 ** 2 / (3 * t * denominator)


def coeffs_from_u(u: RatFunc) -> SubstCoeffs:
    a0, b0 = A0, B0
    spread = a0 ** 8 - b0 ** 8
    return SubstCoeffs(
        a0=a0,
        a1=b0 ** 3,
        a2=spread * u / (3 * a0 * b0 ** 2),
        b0=b0,
        b1=-a0 ** 3,
        b2=spread * (u - 1) / (3 * a0 ** 2 * b0),
    )


def trace_from_point(pt: CurvePoint, n: int) -> PipelineTrace:
    u, v = uv_from_point(pt)
    return PipelineTrace(n=n, u=u, v=v, x=x_from_uv(u, v), coeffs=coeffs_from_u(u))


def _same_up_to_sign(f: HomBiPoly, g: HomBiPoly) -> bool:
    return f == g or f == -g


def is_trivial(q: Quartet) -> bool:
    A, B, C, D = q.forms
    return (
        (_same_up_to_sign(A, C) and _same_up_to_sign(B, D))
        or (_same_up_to_sign(A, D) and _same_up_to_sign(B, C))
    )


def quartet_from_trace(trace: PipelineTrace) -> Quartet:
    x, c = trace.x, trace.coeffs
    x2 = x ** 2
    values = (
        c.a0 * x2 + c.a1 * x + c.a2,
        c.b0 * x2 + c.b1 * x + c.b2,
        c.a0 * x2 - c.a1 * x + c.a2,
        c.b0 * x2 - c.b1 * x + c.b2,
    )
    normalized = quartet_normalize([homogenize(value) for value in values])
    quartet = Quartet(
        *normalized.forms,
        degree=normalized.degree,
        source=trace.n,
        removed_content=normalized.removed_content,
        removed_gcd_degree=normalized.removed_gcd_degree,
    )
    return replace(quartet, trivial=is_trivial(quartet))


def derive_quartet(n: int, max_n: int | None = None) -> Quartet:
    if n < 1:
        raise UsageError(f"the multiple n must be positive, got {n}")
    if max_n is not None and n > max_n:
        raise UsageError(f"n = {n} exceeds the configured maximum {max_n}")
    curve = biquadrate_curve()
    point = ec_scalar_mul(curve, n, base_point())
    quartet = quartet_from_trace(trace_from_point(point, n))
    if not symbolic_identity(quartet):
        raise VerificationError(f"the quartet of {n}P does not satisfy A^4 + B^4 = C^4 + D^4")
    logger.debug("derived %dP quartet of degree %d", n, quartet.degree)
    return quartet


def reference_f() -> HomBiPoly:
    """f(m, n) = (m - n)(m^2 + mn + n^2)(2m^18 + ... - n^18), expanded in (p, q)."""
    m, n = P, Q
    f = (
        (m - n)
        * (m ** 2 + m * n + n ** 2)
        * (
            2 * m ** 18 + 3 * m ** 15 * n ** 3 + 23 * m ** 12 * n ** 6 + 6 * m ** 9 * n ** 9
            + 8 * m ** 6 * n ** 12 - 9 * m ** 3 * n ** 15 - n ** 18
        )
    )
    return HomBiPoly.from_poly(f, 21)


REFERENCE_ASSIGNMENT = {
    "f(p, q)": (P_FORM, Q_FORM),
    "f(q, -p)": (Q_FORM, -P_FORM),
    "f(p, -q)": (P_FORM, -Q_FORM),
    "f(q, p)": (Q_FORM, P_FORM),
}


def reference_quartet() -> Quartet:
    f = reference_f()
    A, B, C, D = (f.compose(*images) for images in REFERENCE_ASSIGNMENT.values())
    return Quartet(A, B, C, D, degree=21, source=2)


def _canonical_sign(form: HomBiPoly) -> HomBiPoly:
    return -form if form.leading_coefficient < 0 else form


def _solution_key(q: Quartet) -> list:
    pairs = [
        sorted(_canonical_sign(form).coefficients for form in pair)
        for pair in ((q.A, q.B), (q.C, q.D))
    ]
    return sorted(pairs)


def same_solution(first: Quartet, second: Quartet) -> bool:
    """Equal as unordered pairs of pairs, each form up to sign."""
    return first.degree == second.degree and _solution_key(first) == _solution_key(second)


def factored_labels(q: Quartet) -> dict[str, str] | None:
    """Name each form as a signed variant of the reference f, if all of them match."""
    if q.degree != 21:
        return None
    f = reference_f()
    variants = {label: f.compose(*images) for label, images in REFERENCE_ASSIGNMENT.items()}
    labels = {}
    for name, form in zip("ABCD", q.forms):
        for label, variant in variants.items():
            if form == variant:
                labels[name] = label
                break
            if form == -variant:
                labels[name] = f"-{label}"
                break
        else:
            return None
    return labels


AUDIT_VARIABLES = ("a0", "a1", "a2", "b0", "b1", "b2", "x", "t", "u", "v", "X", "Y")

AUDIT_CHECKS = (
    "expansion",
    "vanishing_coefficients",
    "residual_quadric",
    "quadric_in_uv",
    "weierstrass_transform",
)


def _describe(residual) -> str:
    if not residual:
        return "0"
    text = str(residual)
    return text if len(text) <= 120 else f"{text[:117]}..."


def audit_symbolic(corrupt: str | None = None) -> AuditReport:
    """Re-derive every reduction step over generic symbols and record residuals.

    ``corrupt`` names one check whose reference constant is bumped by one,
    so the failure path can be exercised.
    """
    if corrupt is not None and corrupt not in AUDIT_CHECKS:
        raise UsageError(f"unknown audit check {corrupt!r}")

    def constant(check: str, value: int) -> int:
        return value + 1 if corrupt == check else value

    R = multi_ring(AUDIT_VARIABLES)
    K = R.to_field()
    a0, a1, a2, b0, b1, b2, x, tt, u, v, X, Y = R.gens
    checks = []

    A = a0 * x ** 2 + a1 * x + a2
    B = b0 * x ** 2 + b1 * x + b2
    C = a0 * x ** 2 - a1 * x + a2
    D = b0 * x ** 2 - b1 * x + b2
    sextic = (
        (a0 ** 3 * a1 + b0 ** 3 * b1) * x ** 6
        + (3 * a0 ** 2 * a1 * a2 + a0 * a1 ** 3 + 3 * b0 ** 2 * b1 * b2 + b0 * b1 ** 3) * x ** 4
        + (3 * a0 * a1 * a2 ** 2 + a1 ** 3 * a2 + 3 * b0 * b1 * b2 ** 2 + b1 ** 3 * b2) * x ** 2
        + a1 * a2 ** 3
        + b1 * b2 ** 3
    )
    residual = A ** 4 + B ** 4 - C ** 4 - D ** 4 - constant("expansion", 8) * x * sextic
    checks.append(AuditCheck(1, "expansion", not residual, _describe(residual)))

    spread = K(a0 ** 8 - b0 ** 8)
    choice = {
        "a1": b0 ** 3,
        "b1": -a0 ** 3,
        "a2": spread * K(u) / K(3 * a0 * b0 ** 2),
        "b2": spread * K(u - 1) / K(3 * a0 ** 2 * b0),
    }
    perturbed = {**choice, "a1": constant("vanishing_coefficients", 1) * b0 ** 3}
    leftovers = [mpoly_substitute(sextic.coeff_wrt(x, power), perturbed) for power in (6, 4)]
    vanished = not any(leftovers)
    checks.append(
        AuditCheck(
            2,
            "vanishing_coefficients",
            vanished,
            "0" if vanished else "; ".join(_describe(item) for item in leftovers),
        )
    )

    def quadric(nine: int):
        return (
            nine * a0 ** 2 * b0 ** 2 * ((a0 ** 8 - b0 ** 8) * u + b0 ** 8) * x ** 2
            + (a0 ** 8 - b0 ** 8) ** 2 * (3 * u ** 2 - 3 * u + 1)
        )

    reduced = to_field(R, mpoly_substitute(sextic, choice))
    residual = reduced * K(27 * a0 ** 3 * b0 ** 3) / spread - K(quadric(constant("residual_quadric", 9)))
    checks.append(AuditCheck(3, "residual_quadric", not residual, _describe(residual)))

    s8 = tt ** 8 - 1

    def uv_curve(three: int):
        return v ** 2 - (three * u ** 2 - 3 * u + 1) * ((1 - tt ** 8) * u - 1)

    in_uv = to_field(
        R,
        mpoly_substitute(quadric(9), {"a0": b0 * tt, "x": K(v * b0 ** 2 * s8) / K(3 * tt * (s8 * u + 1))}),
    )
    expected = K(b0 ** 16 * s8 ** 2) / K(s8 * u + 1) * K(uv_curve(constant("quadric_in_uv", 3)))
    residual = in_uv - expected
    checks.append(AuditCheck(4, "quadric_in_uv", not residual, _describe(residual)))

    curve = biquadrate_curve()
    weierstrass = K(Y ** 2) - (
        K(constant("weierstrass_transform", 1) * X ** 3)
        + to_field(R, curve.a2) * K(X ** 2)
        + to_field(R, curve.a4) * K(X)
        + to_field(R, curve.a6)
    )
    u_of_X = K(-(X + 3)) / K(3 * s8)
    v_of_Y = K(Y) / K(3 * s8)
    transformed = to_field(R, mpoly_substitute(uv_curve(3), {"u": u_of_X, "v": v_of_Y}))
    residual = K(9 * s8 ** 2) * transformed - weierstrass
    X_of_u = 3 * (1 - tt ** 8) * u - 3
    Y_of_v = 3 * v * s8
    roundtrip = [
        to_field(R, mpoly_substitute(X_of_u, {"u": u_of_X})) - K(X),
        to_field(R, mpoly_substitute(Y_of_v, {"v": v_of_Y})) - K(Y),
        to_field(R, mpoly_substitute(-(X + 3), {"X": X_of_u})) / K(3 * s8) - K(u),
        to_field(R, mpoly_substitute(Y, {"Y": Y_of_v})) / K(3 * s8) - K(v),
    ]
    passed = not residual and not any(roundtrip)
    if residual:
        description = _describe(residual)
    else:
        description = "0" if passed else "inverse maps do not round-trip"
    checks.append(AuditCheck(5, "weierstrass_transform", passed, description))

    for check in checks:
        logger.debug("audit %s: %s", check.name, "pass" if check.passed else check.residual)
    return AuditReport(tuple(checks))

"""Exact arithmetic over Q: rationals, Q[t], Q(t), sparse multivariate
polynomials and homogeneous integer forms in (p, q).

Heavy lifting is done by ``sympy.polys`` sparse rings; the wrappers here
keep the canonical forms the rest of the package compares against.
"""
import logging
import math
from collections.abc import Mapping, Sequence
from dataclasses import dataclass
from fractions import Fraction
from functools import reduce
from typing import Union

from sympy.polys.domains import QQ, ZZ
from sympy.polys.fields import FracElement
from sympy.polys.orderings import grlex, lex
from sympy.polys.rings import PolyElement, PolyRing, ring

from app.system.exceptions import InternalInvariantError, UnknownVariableError

logger = logging.getLogger(__name__)

Rational = QQ.dtype
UniPoly = PolyElement
MultiPoly = PolyElement
MultiRatFunc = FracElement

T_RING, T = ring("t", QQ)
BI_RING, P, Q = ring("p,q", ZZ, lex)


def to_rational(value: Union[int, Fraction, "Rational"]) -> "Rational":
    if isinstance(value, Fraction):
        return QQ(value.numerator, value.denominator)
    return QQ.convert(value)


def rational(numerator: int, denominator: int = 1) -> "Rational":
    if denominator == 0:
        raise ZeroDivisionError("rational with zero denominator")
    return QQ(numerator, denominator)


def uni_from_coeffs(coefficients: Sequence) -> UniPoly:
    """Build a polynomial in t from coefficients in ascending powers."""
    return T_RING.from_dict({(k,): to_rational(c) for k, c in enumerate(coefficients) if c})


def uni_coeffs(poly: UniPoly) -> tuple:
    return tuple(poly.get((k,), QQ.zero) for k in range(uni_degree(poly) + 1))


def uni_degree(poly: UniPoly) -> int:
    return -1 if not poly else int(poly.degree())


def poly_gcd(a: UniPoly, b: UniPoly) -> UniPoly:
    if not a and not b:
        return T_RING.zero
    return a.gcd(b).monic()


@dataclass(frozen=True, eq=False)
class RatFunc:
    """Reduced element of Q(t): gcd(num, den) = 1 and den monic.

    Build values through ``ratfunc_reduce`` or the arithmetic operators;
    the constructor only checks the cheap half of the invariant.
    """

    num: UniPoly
    den: UniPoly

    def __post_init__(self):
        if not self.den:
            raise ZeroDivisionError("rational function with zero denominator")
        if self.den.LC != QQ.one:
            raise InternalInvariantError("rational function denominator is not monic")

    @classmethod
    def from_poly(cls, poly: UniPoly) -> "RatFunc":
        return cls(poly, T_RING.one)

    @classmethod
    def constant(cls, value) -> "RatFunc":
        return cls(T_RING.ground_new(to_rational(value)), T_RING.one)

    @classmethod
    def variable(cls) -> "RatFunc":
        return cls(T, T_RING.one)

    @property
    def degree(self) -> int:
        return max(uni_degree(self.num), uni_degree(self.den))

    @property
    def is_polynomial(self) -> bool:
        return self.den == T_RING.one

    def __call__(self, value) -> "Rational":
        point = to_rational(value)
        denominator = self.den(point)
        if not denominator:
            raise ZeroDivisionError(f"pole of {self} at t = {value}")
        return self.num(point) / denominator

    def __eq__(self, other) -> bool:
        try:
            other = _coerce(other)
        except TypeError:
            return NotImplemented
        return self.num == other.num and self.den == other.den

    def __hash__(self) -> int:
        return hash((self.num, self.den))

    def __bool__(self) -> bool:
        return bool(self.num)

    def __neg__(self) -> "RatFunc":
        return RatFunc(-self.num, self.den)

    def __add__(self, other) -> "RatFunc":
        other = _coerce(other)
        if self.den == other.den:
            return ratfunc_reduce(self.num + other.num, self.den)
        return ratfunc_reduce(self.num * other.den + other.num * self.den, self.den * other.den)

    __radd__ = __add__

    def __sub__(self, other) -> "RatFunc":
        return self + (-_coerce(other))

    def __rsub__(self, other) -> "RatFunc":
        return _coerce(other) - self

    def __mul__(self, other) -> "RatFunc":
        other = _coerce(other)
        return ratfunc_reduce(self.num * other.num, self.den * other.den)

    __rmul__ = __mul__

    def __truediv__(self, other) -> "RatFunc":
        other = _coerce(other)
        if not other:
            raise ZeroDivisionError("division by the zero rational function")
        return ratfunc_reduce(self.num * other.den, self.den * other.num)

    def __rtruediv__(self, other) -> "RatFunc":
        return _coerce(other) / self

    def __pow__(self, exponent: int) -> "RatFunc":
        if exponent < 0:
            return RatFunc.constant(1) / self ** (-exponent)
        return RatFunc(self.num ** exponent, self.den ** exponent)

    def __str__(self) -> str:
        if self.is_polynomial:
            return str(self.num)
        return f"({self.num})/({self.den})"

    __repr__ = __str__


def _coerce(value) -> RatFunc:
    if isinstance(value, RatFunc):
        return value
    if isinstance(value, PolyElement) and value.ring == T_RING:
        return RatFunc.from_poly(value)
    if isinstance(value, (int, Fraction, QQ.dtype)):
        return RatFunc.constant(value)
    raise TypeError(f"cannot use {type(value).__name__} as an element of Q(t)")


def ratfunc_reduce(num: UniPoly, den: UniPoly) -> RatFunc:
    if not den:
        raise ZeroDivisionError("rational function with zero denominator")
    common = poly_gcd(num, den)
    if common != T_RING.one:
        num = num.exquo(common)
        den = den.exquo(common)
    leading = den.LC
    return RatFunc(num.quo_ground(leading), den.monic())


def multi_ring(names: Sequence[str]) -> PolyRing:
    """Polynomial ring over Q in the declared variables, graded-lex ordered."""
    return ring(",".join(names), QQ, grlex)[0]


def _variable_names(poly_ring: PolyRing) -> list[str]:
    return [str(symbol) for symbol in poly_ring.symbols]


def _as_quotient(poly_ring: PolyRing, value) -> tuple[PolyElement, PolyElement]:
    if isinstance(value, RatFunc):
        return value.num.set_ring(poly_ring), value.den.set_ring(poly_ring)
    if isinstance(value, FracElement):
        return value.numer.set_ring(poly_ring), value.denom.set_ring(poly_ring)
    if isinstance(value, PolyElement):
        return value.set_ring(poly_ring), poly_ring.one
    return poly_ring.ground_new(to_rational(value)), poly_ring.one


def to_field(poly_ring: PolyRing, value) -> MultiRatFunc:
    """Embed a polynomial, rational function or constant into Frac(poly_ring)."""
    numerator, denominator = _as_quotient(poly_ring, value)
    return poly_ring.to_field().new(numerator, denominator)


def normalize_quotient(value: MultiRatFunc) -> Union[MultiPoly, RatFunc, MultiRatFunc]:
    poly_ring = value.field.ring
    numerator, denominator = value.numer, value.denom
    if denominator.is_ground:
        return numerator.quo_ground(denominator.LC)
    names = _variable_names(poly_ring)
    used = {
        names[i]
        for part in (numerator, denominator)
        for monom in part.itermonoms()
        for i, exponent in enumerate(monom)
        if exponent
    }
    if used == {"t"}:
        return ratfunc_reduce(numerator.set_ring(T_RING), denominator.set_ring(T_RING))
    return value


def mpoly_substitute(
    poly: MultiPoly,
    bindings: Mapping[str, object],
) -> Union[MultiPoly, RatFunc, MultiRatFunc]:
    """Substitute values for named variables of ``poly``.

    Values may be constants, polynomials or rational functions over any
    subset of the declared variables. Rational images are handled over a
    single common denominator, so only one cancellation happens at the end.
    """
    poly_ring = poly.ring
    names = _variable_names(poly_ring)
    unknown = sorted(set(bindings) - set(names))
    if unknown:
        raise UnknownVariableError(f"variables {unknown} are not declared in {names}")

    images = {names.index(name): _as_quotient(poly_ring, value) for name, value in bindings.items()}
    top = {i: max((monom[i] for monom in poly.itermonoms()), default=0) for i in images}

    numerator = poly_ring.zero
    for monom, coeff in poly.iterterms():
        term = poly_ring.ground_new(coeff)
        for i, exponent in enumerate(monom):
            if i in images:
                image_num, image_den = images[i]
                if exponent:
                    term *= image_num ** exponent
                if top[i] != exponent:
                    term *= image_den ** (top[i] - exponent)
            elif exponent:
                term *= poly_ring.gens[i] ** exponent
        numerator += term

    denominator = poly_ring.one
    for i, (_, image_den) in images.items():
        denominator *= image_den ** top[i]

    if denominator == poly_ring.one:
        return numerator
    return normalize_quotient(poly_ring.to_field().new(numerator, denominator))


@dataclass(frozen=True)
class HomBiPoly:
    """Homogeneous form in (p, q); ``coefficients[k]`` multiplies p^(degree-k) q^k."""

    degree: int
    coefficients: tuple[int, ...]

    def __post_init__(self):
        if self.degree < 0 or len(self.coefficients) != self.degree + 1:
            raise InternalInvariantError(
                f"form of degree {self.degree} needs {self.degree + 1} coefficients, "
                f"got {len(self.coefficients)}"
            )

    @classmethod
    def zero(cls, degree: int) -> "HomBiPoly":
        return cls(degree, (0,) * (degree + 1))

    @classmethod
    def from_poly(cls, poly: PolyElement, degree: int | None = None) -> "HomBiPoly":
        if degree is None:
            if not poly:
                raise InternalInvariantError("the degree of a zero form must be given")
            degree = sum(next(iter(poly.itermonoms())))
        coefficients = [0] * (degree + 1)
        for (p_exp, q_exp), coeff in poly.iterterms():
            if p_exp + q_exp != degree:
                raise InternalInvariantError(f"monomial p^{p_exp} q^{q_exp} is not of degree {degree}")
            coefficients[q_exp] = int(coeff)
        return cls(degree, tuple(coefficients))

    def to_poly(self) -> PolyElement:
        return BI_RING.from_dict(
            {(self.degree - k, k): c for k, c in enumerate(self.coefficients) if c}
        )

    @property
    def is_zero(self) -> bool:
        return not any(self.coefficients)

    @property
    def content(self) -> int:
        return math.gcd(*self.coefficients)

    @property
    def leading_coefficient(self) -> int:
        return next((c for c in self.coefficients if c), 0)

    def primitive(self) -> tuple[int, "HomBiPoly"]:
        content = self.content
        if content in (0, 1):
            return content, self
        return content, HomBiPoly(self.degree, tuple(c // content for c in self.coefficients))

    def compose(self, p_image: "HomBiPoly", q_image: "HomBiPoly") -> "HomBiPoly":
        """H(p_image, q_image) for forms of a common degree."""
        if p_image.degree != q_image.degree:
            raise InternalInvariantError("substituted forms must share one degree")
        composed = self.to_poly().compose([(P, p_image.to_poly()), (Q, q_image.to_poly())])
        return HomBiPoly.from_poly(composed, self.degree * p_image.degree)

    def __call__(self, p: int, q: int) -> int:
        return evaluate_bipoly(self, p, q)

    def __neg__(self) -> "HomBiPoly":
        return HomBiPoly(self.degree, tuple(-c for c in self.coefficients))

    def __add__(self, other: "HomBiPoly") -> "HomBiPoly":
        if self.degree != other.degree:
            raise InternalInvariantError(f"cannot add forms of degrees {self.degree} and {other.degree}")
        return HomBiPoly(self.degree, tuple(a + b for a, b in zip(self.coefficients, other.coefficients)))

    def __sub__(self, other: "HomBiPoly") -> "HomBiPoly":
        return self + (-other)

    def __mul__(self, other) -> "HomBiPoly":
        if isinstance(other, int):
            return HomBiPoly(self.degree, tuple(c * other for c in self.coefficients))
        return HomBiPoly.from_poly(self.to_poly() * other.to_poly(), self.degree + other.degree)

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "HomBiPoly":
        return HomBiPoly.from_poly(self.to_poly() ** exponent, self.degree * exponent)

    def __str__(self) -> str:
        terms = [
            (c, _monomial_text(self.degree - k, k))
            for k, c in enumerate(self.coefficients)
            if c
        ]
        if not terms:
            return "0"
        text = ""
        for index, (coeff, monomial) in enumerate(terms):
            sign = "-" if coeff < 0 else "+"
            magnitude = abs(coeff)
            if monomial:
                body = monomial if magnitude == 1 else f"{magnitude}*{monomial}"
            else:
                body = str(magnitude)
            if index == 0:
                text = body if sign == "+" else f"-{body}"
            else:
                text += f" {sign} {body}"
        return text


def _monomial_text(p_exp: int, q_exp: int) -> str:
    parts = []
    for name, exponent in (("p", p_exp), ("q", q_exp)):
        if exponent == 1:
            parts.append(name)
        elif exponent > 1:
            parts.append(f"{name}^{exponent}")
    return "*".join(parts)


P_FORM = HomBiPoly(1, (1, 0))
Q_FORM = HomBiPoly(1, (0, 1))


def evaluate_bipoly(form: HomBiPoly, p: int, q: int) -> int:
    d = form.degree
    return sum(c * p ** (d - k) * q ** k for k, c in enumerate(form.coefficients) if c)


def homogenize(r: RatFunc) -> tuple[HomBiPoly, HomBiPoly]:
    """Write t = p/q and clear denominators of num and den jointly."""
    degree = max(r.degree, 0)
    coefficients = list(r.num.itercoeffs()) + list(r.den.itercoeffs())
    scale = reduce(math.lcm, (int(c.denominator) for c in coefficients), 1)

    def lift(poly: UniPoly) -> list[int]:
        lifted = [0] * (degree + 1)
        for (power,), coeff in poly.iterterms():
            lifted[degree - power] = int(coeff.numerator) * (scale // int(coeff.denominator))
        return lifted

    numerator, denominator = lift(r.num), lift(r.den)
    content = math.gcd(*numerator, *denominator)
    return (
        HomBiPoly(degree, tuple(c // content for c in numerator)),
        HomBiPoly(degree, tuple(c // content for c in denominator)),
    )


@dataclass(frozen=True)
class NormalizedForms:
    forms: tuple[HomBiPoly, ...]
    degree: int
    removed_content: int
    removed_gcd_degree: int


def _total_degree(poly: PolyElement) -> int:
    return max(sum(monom) for monom in poly.itermonoms())


def quartet_normalize(raw: Sequence[tuple[HomBiPoly, HomBiPoly]]) -> NormalizedForms:
    """Bring four value-preserving (numerator, denominator) pairs to one
    primitive integer quartet of equal degree; the first form leads positive."""
    if len(raw) != 4:
        raise InternalInvariantError(f"a quartet needs four forms, got {len(raw)}")

    denominators = [den.to_poly() for _, den in raw]
    common = reduce(lambda a, b: a.lcm(b), denominators)
    degree = _total_degree(common)
    polys = [num.to_poly() * common.exquo(den) for (num, _), den in zip(raw, denominators)]
    for poly in polys:
        if poly and _total_degree(poly) != degree:
            raise InternalInvariantError("quartet forms have inconsistent degrees after clearing")

    content = math.gcd(*(int(c) for poly in polys for c in poly.itercoeffs()))
    if content > 1:
        polys = [poly.quo_ground(content) for poly in polys]

    nonzero = [poly for poly in polys if poly]
    shared = reduce(lambda a, b: a.gcd(b), nonzero) if nonzero else BI_RING.one
    removed_gcd_degree = _total_degree(shared) if shared else 0
    if removed_gcd_degree:
        polys = [poly.exquo(shared) for poly in polys]
        logger.debug("removed a common factor of degree %d", removed_gcd_degree)
    degree -= removed_gcd_degree

    forms = [HomBiPoly.from_poly(poly, degree) for poly in polys]

    if forms[0].leading_coefficient < 0:
        forms = [-form for form in forms]
    return NormalizedForms(tuple(forms), degree, content, removed_gcd_degree)

from fractions import Fraction

import pytest

from app.core.polycore import (
    P,
    P_FORM,
    Q,
    Q_FORM,
    QQ,
    T,
    T_RING,
    HomBiPoly,
    RatFunc,
    evaluate_bipoly,
    homogenize,
    mpoly_substitute,
    multi_ring,
    poly_gcd,
    quartet_normalize,
    ratfunc_reduce,
    rational,
    to_rational,
    uni_coeffs,
    uni_degree,
    uni_from_coeffs,
)
from app.system.exceptions import InternalInvariantError, UnknownVariableError

t = RatFunc.variable()


def test_rationals_are_reduced():
    assert rational(4, 6) == QQ(2, 3)
    assert to_rational(Fraction(-3, 9)) == QQ(-1, 3)
    assert to_rational(0) == QQ(0, 1)
    with pytest.raises(ZeroDivisionError):
        rational(1, 0)


def test_uni_poly_helpers():
    poly = uni_from_coeffs([1, 0, QQ(1, 2)])
    assert poly == QQ(1, 2) * T ** 2 + 1
    assert uni_coeffs(poly) == (QQ(1), QQ(0), QQ(1, 2))
    assert uni_degree(poly) == 2
    assert uni_degree(T_RING.zero) == -1
    assert uni_coeffs(T_RING.zero) == ()


def test_poly_gcd():
    assert poly_gcd(T ** 2 - 1, T ** 3 - 1) == T - 1
    assert poly_gcd(3 * T ** 2 + 3, T_RING.zero) == T ** 2 + 1
    assert poly_gcd(T ** 18 + T ** 12 + T ** 6 + 1, T ** 3) == T_RING.one
    assert poly_gcd(T_RING.zero, T_RING.zero) == T_RING.zero


def test_ratfunc_reduce_cancels_and_makes_denominator_monic():
    assert ratfunc_reduce(T ** 2 - 1, T - 1) == t + 1
    assert ratfunc_reduce((T ** 8 - 1) * (T ** 2 + 3), T ** 8 - 1) == t ** 2 + 3

    square = (T ** 6 - 2 * T ** 4 - 2 * T ** 2 + 1) ** 2
    reduced = ratfunc_reduce(square, 4 * T ** 2)
    assert reduced.den == T ** 2
    assert reduced.num == square.quo_ground(QQ(4))

    halves = ratfunc_reduce(2 * T, 4 * T + 2)
    assert halves.den == T + QQ(1, 2)
    assert halves.num == QQ(1, 2) * T


def test_ratfunc_reduce_is_idempotent():
    r = ratfunc_reduce(T ** 3 - T, 2 * T ** 2 + 2 * T)
    assert ratfunc_reduce(r.num, r.den) == r


def test_ratfunc_zero_denominator():
    with pytest.raises(ZeroDivisionError):
        ratfunc_reduce(T, T_RING.zero)
    with pytest.raises(ZeroDivisionError):
        t / (t - t)


def test_ratfunc_arithmetic_and_evaluation():
    f = (t ** 2 + 1) / t
    g = (t - 1) / (t + 2)
    for point in (QQ(3), QQ(-1, 2), QQ(5, 7)):
        assert (f * g)(point) == f(point) * g(point)
        assert (f + g)(point) == f(point) + g(point)
        assert (f - g)(point) == f(point) - g(point)
        assert (f / g)(point) == f(point) / g(point)
    assert f ** -1 == t / (t ** 2 + 1)
    assert 1 - f == -(f - 1)
    assert f.degree == 2
    assert not (f - f)
    with pytest.raises(ZeroDivisionError):
        f(0)


def test_ratfunc_equality_with_plain_values():
    assert RatFunc.constant(3) == 3
    assert RatFunc.from_poly(T + 1) == t + 1
    assert t != 1


def test_mpoly_substitute_constant_term():
    R = multi_ring(("a0", "a1", "a2", "x"))
    a0, a1, a2, x = R.gens
    assert mpoly_substitute(a0 * x ** 2 + a1 * x + a2, {"x": 0}) == a2


def test_mpoly_substitute_cancels_the_sextic_leading_coefficient():
    R = multi_ring(("a0", "a1", "b0", "b1"))
    a0, a1, b0, b1 = R.gens
    leading = a0 ** 3 * a1 + b0 ** 3 * b1
    assert not mpoly_substitute(leading, {"a1": b0 ** 3, "b1": -a0 ** 3})


def test_mpoly_substitute_in_t():
    R = multi_ring(("x", "t"))
    x, tt = R.gens
    assert not mpoly_substitute(tt ** 8 - 1, {"t": 1})
    assert mpoly_substitute(x * tt, {"x": 1 / t}) == 1
    assert mpoly_substitute(x, {"x": 1 / t}) == 1 / t


def test_mpoly_substitute_keeps_free_variables():
    R = multi_ring(("x", "y"))
    x, y = R.gens
    assert mpoly_substitute(x ** 2 + x * y, {"x": y + 1}) == (y + 1) ** 2 + (y + 1) * y


def test_mpoly_substitute_rejects_undeclared_variables():
    R = multi_ring(("x", "y"))
    x, _ = R.gens
    with pytest.raises(UnknownVariableError):
        mpoly_substitute(x, {"z": 1})


def test_multivariate_agrees_with_univariate():
    R = multi_ring(("t", "x"))
    tt, _ = R.gens
    f, g = T ** 3 - 2 * T + 1, 3 * T ** 2 + T
    assert (f * g + f).set_ring(R) == f.set_ring(R) * g.set_ring(R) + f.set_ring(R)
    assert (tt ** 3 - 2 * tt + 1) == f.set_ring(R)


def test_homogenize():
    assert homogenize(t) == (P_FORM, Q_FORM)
    numerator, denominator = homogenize((t ** 2 + 1) / t)
    assert numerator == HomBiPoly(2, (1, 0, 1))
    assert denominator == HomBiPoly(2, (0, 1, 0))

    numerator, denominator = homogenize(t / 2 + rational(1, 3))
    assert numerator == HomBiPoly(1, (3, 2))
    assert denominator == HomBiPoly(1, (0, 6))


def test_homogenize_recovers_the_value_at_q_equal_one():
    r = (3 * t ** 4 - t / 5) / (t ** 2 + rational(2, 3))
    numerator, denominator = homogenize(r)
    for p in (2, 3, -4):
        assert QQ(numerator(p, 1), denominator(p, 1)) == r(p)


def test_hombipoly_text_and_evaluation():
    form = HomBiPoly(3, (2, 0, -1, 1))
    assert str(form) == "2*p^3 - p*q^2 + q^3"
    assert str(HomBiPoly.zero(2)) == "0"
    assert form(2, 1) == 16 - 2 + 1
    assert evaluate_bipoly(form, 0, 0) == 0
    assert form.leading_coefficient == 2


def test_hombipoly_ring_operations_commute_with_evaluation():
    f = HomBiPoly(2, (1, -3, 2))
    g = HomBiPoly(2, (0, 5, -1))
    for p, q in ((2, 1), (-3, 4), (7, -5)):
        assert (f * g)(p, q) == f(p, q) * g(p, q)
        assert (f + g)(p, q) == f(p, q) + g(p, q)
        assert (f ** 3)(p, q) == f(p, q) ** 3
        assert f.compose(Q_FORM, -P_FORM)(p, q) == f(q, -p)


def test_hombipoly_rejects_mixed_degrees():
    with pytest.raises(InternalInvariantError):
        HomBiPoly.from_poly(P ** 2 + Q)
    with pytest.raises(InternalInvariantError):
        HomBiPoly(2, (1, 2))
    with pytest.raises(InternalInvariantError):
        P_FORM + HomBiPoly(2, (1, 0, 0))


def test_hombipoly_roundtrip_through_the_ring():
    form = HomBiPoly(3, (1, 0, -4, 9))
    assert HomBiPoly.from_poly(form.to_poly(), 3) == form


def test_quartet_normalize_removes_content():
    raw = [
        (P_FORM * 2, Q_FORM),
        (Q_FORM * 2, P_FORM),
        (P_FORM * -2, Q_FORM),
        (Q_FORM * 2, P_FORM),
    ]
    normalized = quartet_normalize(raw)
    assert normalized.degree == 2
    assert normalized.removed_content == 2
    assert normalized.removed_gcd_degree == 0
    assert normalized.forms == (
        HomBiPoly(2, (1, 0, 0)),
        HomBiPoly(2, (0, 0, 1)),
        HomBiPoly(2, (-1, 0, 0)),
        HomBiPoly(2, (0, 0, 1)),
    )


def test_quartet_normalize_removes_the_common_factor():
    q_squared = HomBiPoly(2, (0, 0, 1))
    p_side = HomBiPoly(2, (1, 1, 0))
    q_side = HomBiPoly(2, (0, 1, 1))
    normalized = quartet_normalize(
        [(p_side, q_squared), (q_side, q_squared), (q_side, q_squared), (p_side, q_squared)]
    )
    assert normalized.removed_gcd_degree == 1
    assert normalized.degree == 1
    assert normalized.forms == (P_FORM, Q_FORM, Q_FORM, P_FORM)


def test_quartet_normalize_fixes_the_sign():
    raw = [(-P_FORM, Q_FORM), (Q_FORM, Q_FORM), (-P_FORM, Q_FORM), (Q_FORM, Q_FORM)]
    normalized = quartet_normalize(raw)
    assert normalized.forms == (P_FORM, -Q_FORM, P_FORM, -Q_FORM)


def test_quartet_normalize_needs_four_forms():
    with pytest.raises(InternalInvariantError):
        quartet_normalize([(P_FORM, Q_FORM)])


def test_hombipoly_primitive():
    content, form = HomBiPoly(2, (4, -6, 2)).primitive()
    assert content == 2
    assert form == HomBiPoly(2, (2, -3, 1))
    assert HomBiPoly.zero(1).primitive() == (0, HomBiPoly.zero(1))


def test_mpoly_substitute_binds_zero():
    R = multi_ring(("x", "t"))
    x, tt = R.gens
    assert mpoly_substitute(x + tt ** 8 - 1, {"t": 0}) == x - 1
    assert mpoly_substitute(x ** 3 * tt + tt ** 2, {"x": 0, "t": 2}) == 4
    assert not mpoly_substitute(x * tt, {"x": 0})


def test_mpoly_substitute_zero_next_to_a_rational_image():
    R = multi_ring(("x", "y", "t"))
    x, y, tt = R.gens
    assert mpoly_substitute(x ** 2 + x * y + 1, {"x": 0, "y": 1 / t}) == 1


def test_quartet_normalize_sign_follows_the_first_form():
    raw = [
        (HomBiPoly.zero(1), Q_FORM),
        (-P_FORM, Q_FORM),
        (HomBiPoly.zero(1), Q_FORM),
        (P_FORM, Q_FORM),
    ]
    normalized = quartet_normalize(raw)
    assert normalized.removed_gcd_degree == 1
    assert normalized.forms == (
        HomBiPoly.zero(0),
        HomBiPoly(0, (-1,)),
        HomBiPoly.zero(0),
        HomBiPoly(0, (1,)),
    )

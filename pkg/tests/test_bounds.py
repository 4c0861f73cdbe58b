import math
from fractions import Fraction

import pytest

from riemann_bounds import (
    Affine, BoundSource, Exp, HypothesisNotMet, Interval, Negated, PiecewiseLinear, Power,
    UnclassifiablePiecewise, bound_A_prev, bound_B_prev, bracket_integral, cap_A, cap_B,
    check_monotonicity, compute_sums, endpoint_range,
)

F = Fraction
ZIGZAG = PiecewiseLinear(((0, 0), (1, 1), (2, 0), (3, 1)))


def test_bound_A_prev_square(exact):
    # oracle: A_3 = 14/27; 14/27 * 9/8 and 14/27 + (1/4)(1 - 14/27)
    b = bound_A_prev(Power(2), 2, compute_sums(Power(2), 3, exact))
    assert (b.lower, b.upper) == (F(7, 12), F(23, 36))
    assert b.source is BoundSource.INEQ3
    assert b.lower_strict and b.upper_strict
    assert b.contains(F(5, 8), exact)


def test_bound_B_prev_square(exact):
    # oracle: 5/27 + (1/8)(5/27 - 1) and 5/27 * 3/4
    b = bound_B_prev(Power(2), 2, compute_sums(Power(2), 3, exact))
    assert (b.lower, b.upper) == (F(1, 12), F(5, 36))
    assert b.contains(F(1, 8), exact)


@pytest.mark.parametrize("n", [1, 2, 9])
def test_constant_bounds_collapse(n, exact):
    spec = Affine(0, 5, Interval(1, 3))
    nxt = compute_sums(spec, n + 1, exact)
    for b in (bound_A_prev(spec, n, nxt), bound_B_prev(spec, n, nxt)):
        assert b.lower == b.upper == 10
        assert not (b.lower_strict or b.upper_strict)
    assert cap_A(spec, n, exact) == cap_B(spec, n, exact) == 10


def test_affine_equality_case(exact):
    spec = Affine(1, 0)
    nxt = compute_sums(spec, 2, exact)
    a = bound_A_prev(spec, 1, nxt)
    b = bound_B_prev(spec, 1, nxt)
    assert a.lower == a.upper == 1
    assert b.lower == b.upper == 0
    assert cap_A(spec, 1, exact) == F(3, 4) == nxt.A
    assert cap_B(spec, 1, exact) == F(1, 4) == nxt.B


def test_caps_square(exact):
    assert cap_A(Power(2), 1, exact) == F(3, 4)
    assert cap_B(Power(2), 1, exact) == F(1, 4)
    s2 = compute_sums(Power(2), 2, exact)
    assert s2.A <= F(3, 4) and s2.B <= F(1, 4)


def test_concave_reversal_matches_negation(exact):
    f, g = Power(2), Negated(Power(2))
    for n in (1, 2, 5):
        bf = bound_A_prev(f, n, compute_sums(f, n + 1, exact))
        bg = bound_A_prev(g, n, compute_sums(g, n + 1, exact))
        assert (bg.lower, bg.upper) == (-bf.upper, -bf.lower)
        assert bg.contains(compute_sums(g, n, exact).A, exact)
        assert cap_A(g, n, exact) == -cap_A(f, n, exact)
        assert compute_sums(g, n + 1, exact).A >= cap_A(g, n, exact)


def test_sums_for_wrong_n_rejected(exact):
    with pytest.raises(ValueError):
        bound_A_prev(Power(2), 2, compute_sums(Power(2), 2, exact))


def test_unclassifiable_rejected(exact):
    nxt = compute_sums(ZIGZAG, 3, exact)
    with pytest.raises(UnclassifiablePiecewise):
        bound_A_prev(ZIGZAG, 2, nxt)
    with pytest.raises(UnclassifiablePiecewise):
        cap_B(ZIGZAG, 2, exact)


def test_monotonicity_square(exact):
    v = check_monotonicity(Power(2), 1, 5, exact)
    assert v.a_nonincreasing and v.b_nondecreasing and v.asserted
    assert v.worst_violation <= 0
    # oracle: A_n = (n+1)(2n+1)/(6n^2)
    for n in range(1, 6):
        assert compute_sums(Power(2), n, exact).A == F((n + 1) * (2 * n + 1), 6 * n * n)


def test_monotonicity_identity(exact):
    v = check_monotonicity(Affine(1, 0), 1, 10, exact)
    assert v.a_nonincreasing and v.b_nondecreasing
    for n in range(1, 11):
        assert compute_sums(Affine(1, 0), n, exact).A == F(n + 1, 2 * n)
    assert v.worst_violation < 0


def test_monotonicity_constant(exact):
    v = check_monotonicity(Affine(0, 2), 3, 12, exact)
    assert v.a_nonincreasing and v.b_nondecreasing and v.worst_violation == 0


def test_monotonicity_concave_increasing(flt):
    v = check_monotonicity(Power(F(1, 2)), 1, 40, flt)
    assert v.a_nonincreasing and v.b_nondecreasing


def test_monotonicity_hypothesis(exact):
    with pytest.raises(HypothesisNotMet):
        check_monotonicity(Negated(Power(2)), 1, 5, exact)
    with pytest.raises(HypothesisNotMet):
        check_monotonicity(ZIGZAG, 1, 5, exact)
    v = check_monotonicity(Negated(Power(2)), 1, 5, exact, require_hypothesis=False)
    assert not v.asserted and v.warnings
    # -x^2 is decreasing: A_n increases, so the informational verdict fails
    assert not v.a_nonincreasing and v.worst_violation > 0


def test_monotonicity_range_validated(exact):
    with pytest.raises(ValueError):
        check_monotonicity(Power(2), 3, 3, exact)


def test_endpoint_range(exact, flt):
    r = endpoint_range(Power(2), 7, exact)
    assert (r.lower, r.upper) == (0, 1)
    r = endpoint_range(Affine(2, 1, Interval(0, 3)), 4, exact)
    assert (r.lower, r.upper) == (3, 21)
    r = endpoint_range(Exp(), 3, flt)
    assert float(r.lower) == 1 and float(r.upper) == pytest.approx(math.e, rel=1e-15)
    s = compute_sums(Exp(), 3, flt)
    assert r.contains(s.A, flt) and r.contains(s.B, flt)
    with pytest.raises(HypothesisNotMet):
        endpoint_range(Negated(Exp()), 3, flt)


def test_endpoint_range_allows_increasing_unclassifiable(exact):
    stairs = PiecewiseLinear(((0, 0), (1, 1), (2, 1), (3, 3)))
    r = endpoint_range(stairs, 4, exact)
    assert (r.lower, r.upper) == (0, 9)


def test_bracket_integral(exact):
    b = bracket_integral(Power(2), 2, exact)
    assert (b.lower, b.upper) == (F(1, 8), F(5, 8))
    assert b.contains(F(1, 3), exact) and b.width == F(1, 2)
    b = bracket_integral(Affine(1, 0), 4, exact)
    assert (b.lower, b.upper) == (F(3, 8), F(5, 8)) and b.width == F(1, 4)
    b = bracket_integral(Affine(0, 3, Interval(0, 2)), 5, exact)
    assert b.lower == b.upper == 6


def test_bracket_width_halves(exact):
    spec = Power(3, Interval(1, 2))
    for n in (1, 3, 10, 50):
        assert bracket_integral(spec, 2 * n, exact).width * 2 == bracket_integral(spec, n, exact).width


def test_bracket_integral_contains_integral(flt):
    # integral of e^x over [0,1] is e - 1
    for n in (1, 4, 64):
        assert bracket_integral(Exp(), n, flt).contains(flt.ctx.e - 1, flt, strict=True)


def test_second_expression_is_identity_at_n1(exact):
    # A_1 = (b-a)f(b) and B_1 = (b-a)f(a), so the 1/n^2 bounds are attained at n = 1
    for spec in (Power(2), Power(3, Interval(1, 2)), Negated(Power(2))):
        s1, s2 = compute_sums(spec, 1, exact), compute_sums(spec, 2, exact)
        a, b = bound_A_prev(spec, 1, s2), bound_B_prev(spec, 1, s2)
        convex = not isinstance(spec, Negated)
        assert (a.upper if convex else a.lower) == s1.A
        assert (b.upper if convex else b.lower) == s1.B
        assert not (a.upper_strict if convex else a.lower_strict)
        assert a.contains(s1.A, exact) and b.contains(s1.B, exact)


def test_strict_gaps_from_n2(exact):
    for spec in (Power(2), Power(3)):
        for n in range(2, 40):
            cur, nxt = compute_sums(spec, n, exact), compute_sums(spec, n + 1, exact)
            a, b = bound_A_prev(spec, n, nxt), bound_B_prev(spec, n, nxt)
            assert a.lower < cur.A < a.upper
            assert b.lower < cur.B < b.upper

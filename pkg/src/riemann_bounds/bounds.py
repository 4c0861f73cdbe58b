"""Recursive two-sided bounds on endpoint Riemann sums of convex/concave functions.

For convex f on [a,b], with A_n, B_n the right/left endpoint sums:

    A_{n+1} + (A_{n+1} - (b-a)f(a)) / (n(n+2))  <=  A_n  <=  A_{n+1} + ((b-a)f(b) - A_{n+1}) / n^2
    B_{n+1} + (B_{n+1} - (b-a)f(b)) / (n(n+2))  <=  B_n  <=  B_{n+1} + ((b-a)f(a) - B_{n+1}) / n^2
    A_{n+1} <= (b-a)[ n/(2(n+1)) f(a) + (n+2)/(2(n+1)) f(b) ]
    B_{n+1} <= (b-a)[ (n+2)/(2(n+1)) f(a) + n/(2(n+1)) f(b) ]

Every inequality reverses for concave f and is strict under strict curvature.
Concave specs reuse the same expressions with the roles of the two ends
swapped, so reported values are always the formulas above.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from enum import Enum
from fractions import Fraction

from .errors import HypothesisNotMet, UnclassifiablePiecewise
from .functions import FunctionSpec, ShapeClass, classify, evaluate, monotonicity
from .numeric import NumericMode, Scalar
from .riemann import EndpointSums, compute_sums


class BoundSource(Enum):
    INEQ3 = "Eq3"
    INEQ4 = "Eq4"
    INEQ5 = "Eq5"
    INEQ6 = "Eq6"
    ENDPOINT_RANGE = "EndpointRange"
    INTEGRAL_BRACKET = "IntegralBracket"


@dataclass(frozen=True)
class BoundInterval:
    lower: Scalar
    upper: Scalar
    lower_strict: bool
    upper_strict: bool
    source: BoundSource

    def contains(self, value, mode: NumericMode, strict: bool | None = None) -> bool:
        """Containment under the mode's comparison rule.

        With ``strict=None`` the interval's own strictness flags are honoured.
        """
        lo_strict = self.lower_strict if strict is None else strict
        hi_strict = self.upper_strict if strict is None else strict
        lo_ok = mode.lt(self.lower, value) if lo_strict else mode.le(self.lower, value)
        hi_ok = mode.lt(value, self.upper) if hi_strict else mode.le(value, self.upper)
        return lo_ok and hi_ok

    @property
    def width(self) -> Scalar:
        return self.upper - self.lower


@dataclass(frozen=True)
class MonotonicityVerdict:
    n_range: tuple[int, int]
    a_nonincreasing: bool
    b_nondecreasing: bool
    worst_violation: Scalar
    asserted: bool = True
    warnings: tuple[str, ...] = field(default_factory=tuple)


def _curved_shape(spec: FunctionSpec) -> ShapeClass:
    # classify raises UnclassifiablePiecewise for specs with no curvature
    return classify(spec)


def _endpoint_terms(spec: FunctionSpec, mode: NumericMode):
    length = mode.scalar(spec.domain.length)
    return length * evaluate(spec, spec.a, mode), length * evaluate(spec, spec.b, mode)


def _recursive_bound(
    spec: FunctionSpec,
    n: int,
    next_value: Scalar,
    mode: NumericMode,
    toward: Scalar,
    away: Scalar,
    source: BoundSource,
) -> BoundInterval:
    if n < 1:
        raise ValueError("n must be >= 1")
    shape = _curved_shape(spec)
    first = next_value + (next_value - toward) / (n * (n + 2))
    second = next_value + (away - next_value) / (n * n)
    strict = shape.curvature.is_strict
    # at n = 1 the 1/n^2 expression is (b-a)f(b) = A_1 (resp. (b-a)f(a) = B_1): equality
    second_strict = strict and n > 1
    if shape.curvature.is_convex:
        return BoundInterval(first, second, strict, second_strict, source)
    return BoundInterval(second, first, second_strict, strict, source)


def _check_next(n: int, sums_next: EndpointSums) -> None:
    if sums_next.n != n + 1:
        raise ValueError(f"expected sums for n+1={n + 1}, got n={sums_next.n}")


def bound_A_prev(spec: FunctionSpec, n: int, sums_next: EndpointSums) -> BoundInterval:
    """Interval for A_n computed from A_{n+1} alone."""
    _check_next(n, sums_next)
    mode = sums_next.mode
    fa_term, fb_term = _endpoint_terms(spec, mode)
    return _recursive_bound(spec, n, sums_next.A, mode, fa_term, fb_term, BoundSource.INEQ3)


def bound_B_prev(spec: FunctionSpec, n: int, sums_next: EndpointSums) -> BoundInterval:
    """Interval for B_n computed from B_{n+1} alone."""
    _check_next(n, sums_next)
    mode = sums_next.mode
    fa_term, fb_term = _endpoint_terms(spec, mode)
    return _recursive_bound(spec, n, sums_next.B, mode, fb_term, fa_term, BoundSource.INEQ4)


def _cap(spec: FunctionSpec, n: int, mode: NumericMode, weight_a: Fraction, weight_b: Fraction) -> Scalar:
    if n < 1:
        raise ValueError("n must be >= 1")
    _curved_shape(spec)
    fa = evaluate(spec, spec.a, mode)
    fb = evaluate(spec, spec.b, mode)
    return mode.scalar(spec.domain.length) * (mode.scalar(weight_a) * fa + mode.scalar(weight_b) * fb)


def cap_A(spec: FunctionSpec, n: int, mode: NumericMode) -> Scalar:
    """Ceiling on A_{n+1} for convex f (a floor for concave f)."""
    return _cap(spec, n, mode, Fraction(n, 2 * (n + 1)), Fraction(n + 2, 2 * (n + 1)))


def cap_B(spec: FunctionSpec, n: int, mode: NumericMode) -> Scalar:
    """Ceiling on B_{n+1} for convex f (a floor for concave f)."""
    return _cap(spec, n, mode, Fraction(n + 2, 2 * (n + 1)), Fraction(n, 2 * (n + 1)))


def monotonicity_hypothesis(spec: FunctionSpec) -> str | None:
    """None if f is increasing and convex or concave, else the reason it is not."""
    try:
        shape = classify(spec)
    except UnclassifiablePiecewise as exc:
        return f"not convex or concave: {exc}"
    if not shape.increasing:
        return "function is not increasing"
    return None


def check_monotonicity(
    spec: FunctionSpec,
    n_min: int,
    n_max: int,
    mode: NumericMode,
    require_hypothesis: bool = True,
    sums: dict[int, EndpointSums] | None = None,
) -> MonotonicityVerdict:
    """Check A_{n+1} <= A_n and B_n <= B_{n+1} over n_min..n_max.

    Outside the hypothesis (increasing and convex or concave) this raises
    :class:`HypothesisNotMet`, unless ``require_hypothesis=False``, in which case
    the verdict is computed but flagged ``asserted=False``.
    """
    if not 1 <= n_min < n_max:
        raise ValueError(f"need 1 <= n_min < n_max, got {n_min}..{n_max}")
    reason = monotonicity_hypothesis(spec)
    if reason and require_hypothesis:
        raise HypothesisNotMet(reason)
    sums = sums or {}
    table = [sums.get(n) or compute_sums(spec, n, mode) for n in range(n_min, n_max + 1)]
    a_ok = b_ok = True
    worst = None
    for cur, nxt in zip(table, table[1:]):
        a_ok = a_ok and mode.le(nxt.A, cur.A)
        b_ok = b_ok and mode.le(cur.B, nxt.B)
        for gap in (nxt.A - cur.A, cur.B - nxt.B):
            if worst is None or gap > worst:
                worst = gap
    warnings = (reason,) if reason else ()
    return MonotonicityVerdict((n_min, n_max), a_ok, b_ok, worst, asserted=not reason, warnings=warnings)


def _require_increasing(spec: FunctionSpec) -> None:
    if not monotonicity(spec)[0]:
        raise HypothesisNotMet("function is not increasing")


def endpoint_range(spec: FunctionSpec, n: int, mode: NumericMode) -> BoundInterval:
    """[(b-a)f(a), (b-a)f(b)], which holds every A_n and B_n of an increasing f."""
    if n < 1:
        raise ValueError("n must be >= 1")
    _require_increasing(spec)
    lo, hi = _endpoint_terms(spec, mode)
    return BoundInterval(lo, hi, False, False, BoundSource.ENDPOINT_RANGE)


def bracket_integral(spec: FunctionSpec, n: int, mode: NumericMode) -> BoundInterval:
    """[B_n, A_n] brackets the integral of an increasing f; width (b-a)(f(b)-f(a))/n."""
    _require_increasing(spec)
    sums = compute_sums(spec, n, mode)
    return BoundInterval(sums.B, sums.A, False, False, BoundSource.INTEGRAL_BRACKET)

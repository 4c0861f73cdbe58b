"""Batch verification of every inequality over a fixed built-in corpus."""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction
from typing import Callable, Sequence

from . import alzer
from .bounds import bound_A_prev, bound_B_prev, cap_A, cap_B, endpoint_range, monotonicity_hypothesis
from .functions import FunctionSpec, Negated, Power, classify, evaluate, format_spec, parse_spec
from .numeric import NumericMode, format_rational
from .records import IDENTITY_IDS, INEQUALITY_IDS, VerificationRecord
from .riemann import EndpointSums, compute_sums, difference_identity

SUITES = ("theorem21", "corollary22", "corollary23", "identities", "all")

_BASE_CORPUS = (
    "pow:r=0.5@[0,1]",
    "pow:r=1@[0,1]",
    "pow:r=2@[0,1]",
    "pow:r=3@[0,1]",
    "exp@[0,1]",
    "pwl:(0,0);(1,0);(2,1)",
    "pwl:(0,1);(1/2,0);(1,1/2);(2,3)",
)


def corpus() -> list[FunctionSpec]:
    """Base specs followed by their negations, in a fixed order."""
    base = [parse_spec(t) for t in _BASE_CORPUS]
    return base + [Negated(s) for s in base]


DEFAULT_N = tuple(range(1, 101))
DEFAULT_R = (Fraction(1), Fraction(2), Fraction(3), Fraction(1, 2))


def mode_for(spec: FunctionSpec, mode: NumericMode) -> NumericMode:
    """Exact when both requested and representable; otherwise the float companion."""
    if mode.is_exact and not spec.supports_exact():
        return mode.float_companion()
    return mode


def _sums_table(spec: FunctionSpec, ns, mode: NumericMode) -> dict[int, EndpointSums]:
    return {n: compute_sums(spec, n, mode) for n in sorted(set(ns))}


def _oriented(convex: bool, lhs, rhs):
    return (lhs, rhs) if convex else (rhs, lhs)


def theorem21_records(spec: FunctionSpec, n_values: Sequence[int], mode: NumericMode) -> list[VerificationRecord]:
    mode = mode_for(spec, mode)
    shape = classify(spec)
    convex = shape.curvature.is_convex
    strict = shape.curvature.is_strict
    text = format_spec(spec)
    sums = _sums_table(spec, [m for n in n_values for m in (n, n + 1)], mode)
    out = []

    def rec(ineq, n, lhs, rhs, strict_here=strict):
        lhs, rhs = _oriented(convex, lhs, rhs)
        out.append(VerificationRecord.build(ineq, text, n, None, lhs, rhs, mode.le(lhs, rhs), strict_here, mode))

    for n in n_values:
        cur, nxt = sums[n], sums[n + 1]
        for prefix, interval, value in (
            ("Eq3", bound_A_prev(spec, n, nxt), cur.A),
            ("Eq4", bound_B_prev(spec, n, nxt), cur.B),
        ):
            first, second = (interval.lower, interval.upper) if convex else (interval.upper, interval.lower)
            rec(prefix + "L", n, first, value)
            rec(prefix + "R", n, value, second, strict and n > 1)
        rec("Eq5", n, nxt.A, cap_A(spec, n, mode))
        rec("Eq6", n, nxt.B, cap_B(spec, n, mode))
    return out


def corollary22_records(spec: FunctionSpec, n_values: Sequence[int], mode: NumericMode) -> list[VerificationRecord]:
    """Empty when the spec is outside the corollary's hypothesis."""
    if monotonicity_hypothesis(spec) is not None:
        return []
    mode = mode_for(spec, mode)
    text = format_spec(spec)
    sums = _sums_table(spec, [m for n in n_values for m in (n, n + 1)], mode)
    out = []

    def rec(ineq, n, lhs, rhs):
        out.append(VerificationRecord.build(ineq, text, n, None, lhs, rhs, mode.le(lhs, rhs), False, mode))

    for n in n_values:
        cur, nxt = sums[n], sums[n + 1]
        rec("Eq7", n, nxt.A, cur.A)
        rec("Eq7", n, cur.B, nxt.B)
        box = endpoint_range(spec, n, mode)
        rec("Eq8", n, box.lower, cur.A)
        rec("Eq8", n, cur.A, box.upper)
        rec("Eq9", n, box.lower, cur.B)
        rec("Eq9", n, cur.B, box.upper)
    return out


def corollary23_records(r, n_values: Sequence[int], mode: NumericMode) -> list[VerificationRecord]:
    r = Fraction(r)
    rmode = mode if (r.denominator == 1 or not mode.is_exact) else mode.float_companion()
    text = format_spec(Power(r))
    r_text = format_rational(r)
    out = []
    for n in n_values:
        report = alzer.refined_bounds(n, r, rmode)
        for c in report.comparisons():
            out.append(VerificationRecord.build(c.ineq, text, n, r_text, c.lhs, c.rhs, c.passed, c.strict, rmode))
    return out


def identity_records(spec: FunctionSpec, n_values: Sequence[int], mode: NumericMode) -> list[VerificationRecord]:
    """A_n - B_n = (b-a)(f(b)-f(a))/n and A_n(-f) = -A_n(f), B_n(-f) = -B_n(f)."""
    mode = mode_for(spec, mode)
    text = format_spec(spec)
    neg = Negated(spec)
    length = mode.scalar(spec.domain.length)
    fa, fb = evaluate(spec, spec.a, mode), evaluate(spec, spec.b, mode)
    out = []
    for n in n_values:
        s = compute_sums(spec, n, mode)
        lhs, rhs = s.A - s.B, length * (fb - fa) / n
        ok = mode.eq(difference_identity(s, spec), 0)
        out.append(VerificationRecord.build("IdDiff", text, n, None, lhs, rhs, ok, False, mode))
        ns = compute_sums(neg, n, mode)
        for mine, theirs in ((ns.A, s.A), (ns.B, s.B)):
            out.append(VerificationRecord.build("IdNeg", text, n, None, mine, -theirs,
                                                mode.eq(mine, -theirs), False, mode))
    return out


def _tasks(suite: str, n_values, r_values, mode) -> list[Callable[[], list[VerificationRecord]]]:
    specs = corpus()
    tasks = []
    if suite in ("theorem21", "all"):
        tasks += [lambda s=s: theorem21_records(s, n_values, mode) for s in specs]
    if suite in ("corollary22", "all"):
        tasks += [lambda s=s: corollary22_records(s, n_values, mode) for s in specs]
    if suite in ("corollary23", "all"):
        tasks += [lambda r=r: corollary23_records(r, n_values, mode) for r in r_values]
    if suite in ("identities", "all"):
        tasks += [lambda s=s: identity_records(s, n_values, mode) for s in specs]
    return tasks


def _sort_key(rec: VerificationRecord):
    return (rec.spec, rec.n, Fraction(rec.r) if rec.r is not None else Fraction(-1))


def run_suite(
    suite: str,
    mode: NumericMode,
    n_values: Sequence[int] = DEFAULT_N,
    r_values: Sequence = DEFAULT_R,
    jobs: int = 1,
) -> list[VerificationRecord]:
    """All records of a suite, sorted by (spec, n, r) whatever the job count."""
    if suite not in SUITES:
        raise ValueError(f"unknown suite {suite!r}; choose from {', '.join(SUITES)}")
    tasks = _tasks(suite, list(n_values), [Fraction(r) for r in r_values], mode)
    if jobs > 1:
        with ThreadPoolExecutor(max_workers=jobs) as pool:
            chunks = list(pool.map(lambda t: t(), tasks))
    else:
        chunks = [t() for t in tasks]
    records = [rec for chunk in chunks for rec in chunk]
    # stable: records sharing a key keep their generation order
    return sorted(records, key=_sort_key)


def summary_ids(records: Sequence[VerificationRecord]) -> tuple[str, ...]:
    present = {r.ineq for r in records}
    return INEQUALITY_IDS + tuple(i for i in IDENTITY_IDS if i in present)

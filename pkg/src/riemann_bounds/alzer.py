"""Power sums S_n(r) = 1^r + ... + n^r and the refined Alzer inequality.

The Alzer ratio ((n+1) S_n / (n S_{n+1}))^(1/r) is bracketed, for r >= 1, by

    n/(n+1) * (1 + 1/(n(n+2)))^(1/r)                                  (lower)
    n/(n+1) * (1 + ((n+1)^(r+1) - S_{n+1}) / (n^2 S_{n+1}))^(1/r)     (upper)

and the bracket flips for 0 < r <= 1.  All four quantities (including the
classical bound n/(n+1)) have the form n/(n+1) * X^(1/r), so they are compared
through their radicands X.  For integer r the radicands are exact rationals and
every comparison is exact; no root is ever taken to decide an inequality.
"""

from __future__ import annotations

import threading
from dataclasses import dataclass
from enum import Enum
from fractions import Fraction

from .bounds import bound_A_prev
from .errors import ModeUnsupported
from .functions import Power, classify
from .numeric import CompensatedSum, NumericMode, Scalar, to_fraction
from .riemann import compute_sums


class Direction(Enum):
    REFINE = "refine"
    REVERSE = "reverse"


def direction_for(r) -> Direction:
    """r >= 1 refines; r = 1 is the equality case and counts as REFINE."""
    return Direction.REFINE if Fraction(r) >= 1 else Direction.REVERSE


def _exponent(r) -> Fraction:
    r = Fraction(r)
    if r <= 0:
        raise ValueError(f"exponent r must be positive, got {r}")
    return r


def _is_int(r: Fraction) -> bool:
    return r.denominator == 1


@dataclass(frozen=True)
class PowerSum:
    n: int
    r: Fraction
    value: Scalar


# Prefix tables so sweeps over n cost O(n_max) rather than O(n_max^2).  A prefix
# is bit-identical to summing 1..n from scratch with the same accumulator.
_prefix_lock = threading.Lock()
_exact_prefix: dict[int, list[int]] = {}
_float_prefix: dict[tuple[Fraction, int], tuple[CompensatedSum, list]] = {}


def _exact_power_sum(n: int, r: int) -> int:
    with _prefix_lock:
        table = _exact_prefix.setdefault(r, [0])
        for i in range(len(table), n + 1):
            table.append(table[-1] + i**r)
        return table[n]


def _float_power_sum(n: int, r: Fraction, mode: NumericMode):
    ctx = mode.ctx
    key = (r, ctx.prec)
    with _prefix_lock:
        acc, table = _float_prefix.setdefault(key, (CompensatedSum(mode.zero()), [mode.zero()]))
        r_f = mode.scalar(r)
        for i in range(len(table), n + 1):
            acc.add(ctx.power(i, r_f))
            table.append(acc.value)
        return table[n]


def power_sum(n: int, r, mode: NumericMode) -> PowerSum:
    """S_n(r); big-integer exact for integer r, compensated float otherwise."""
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    r = _exponent(r)
    if _is_int(r):
        value = _exact_power_sum(n, int(r))
        return PowerSum(n, r, value if mode.is_exact else mode.scalar(value))
    if mode.is_exact:
        raise ModeUnsupported(f"power sum with non-integer r={r} is irrational; use float mode")
    return PowerSum(n, r, _float_power_sum(n, r, mode))


def _root_value(n: int, r: Fraction, radicand, mode: NumericMode) -> Scalar:
    """n/(n+1) * radicand^(1/r), exact when that is rational (r = 1)."""
    factor = Fraction(n, n + 1)
    if mode.is_exact and r == 1 and not hasattr(radicand, "_mpf_"):
        return factor * radicand
    fmode = mode.float_companion()
    ctx = fmode.ctx
    x = fmode.scalar(radicand)
    root = ctx.root(x, int(r)) if _is_int(r) else ctx.power(x, 1 / fmode.scalar(r))
    return fmode.scalar(factor) * root


@dataclass(frozen=True)
class AlzerRadicands:
    """X in n/(n+1) * X^(1/r) for each quantity; the classical bound has X = 1."""

    lower: Scalar
    ratio: Scalar
    upper: Scalar
    exact: bool


def radicands(n: int, r, mode: NumericMode) -> AlzerRadicands:
    if n < 1:
        raise ValueError(f"n must be >= 1, got {n}")
    r = _exponent(r)
    lower = Fraction((n + 1) ** 2, n * (n + 2))
    if _is_int(r):
        k = int(r)
        s_n, s_next = _exact_power_sum(n, k), _exact_power_sum(n + 1, k)
        top = (n + 1) ** (k + 1)
        ratio = Fraction(top * s_n, n ** (k + 1) * s_next)
        upper = 1 + Fraction(top - s_next, n * n * s_next)
        return AlzerRadicands(lower, ratio, upper, exact=True)
    if mode.is_exact:
        raise ModeUnsupported(f"non-integer r={r} has irrational radicands; use float mode")
    ctx = mode.ctx
    s_n = power_sum(n, r, mode).value
    s_next = power_sum(n + 1, r, mode).value
    top = ctx.power(n + 1, mode.scalar(r + 1))
    ratio = top * s_n / (ctx.power(n, mode.scalar(r + 1)) * s_next)
    upper = 1 + (top - s_next) / (n * n * s_next)
    return AlzerRadicands(mode.scalar(lower), ratio, upper, exact=False)


def alzer_ratio(n: int, r, mode: NumericMode) -> Scalar:
    """((n+1) S_n(r) / (n S_{n+1}(r)))^(1/r).

    The root is float-evaluated; use :func:`alzer_radicand` for exact work.
    """
    r = _exponent(r)
    return _root_value(n, r, radicands(n, r, mode).ratio, mode)


def alzer_radicand(n: int, r, mode: NumericMode) -> Scalar:
    """(n+1) S_n(r) / (n S_{n+1}(r)), the r-th power of the Alzer ratio."""
    r = _exponent(r)
    s_n = power_sum(n, r, mode).value
    s_next = power_sum(n + 1, r, mode).value
    if mode.is_exact:
        return Fraction((n + 1) * s_n, n * s_next)
    return (n + 1) * s_n / (n * s_next)


@dataclass(frozen=True)
class Comparison:
    """One inequality lhs <= rhs, already oriented by direction."""

    ineq: str
    lhs: Scalar
    rhs: Scalar
    passed: bool
    strict: bool


@dataclass(frozen=True)
class AlzerReport:
    n: int
    r: Fraction
    ratio: Scalar
    refined_lower: Scalar
    refined_upper: Scalar
    classical_lower: Scalar
    direction: Direction
    radicands: AlzerRadicands
    mode: NumericMode

    def _le(self, x_rad, y_rad, x_val, y_val) -> bool:
        if self.radicands.exact:
            return to_fraction(x_rad) <= to_fraction(y_rad)
        return self.mode.le(x_val, y_val)

    def comparisons(self) -> list[Comparison]:
        """Classical bound and both refined bounds as oriented comparisons."""
        rad, n, r = self.radicands, self.n, self.r
        one = Fraction(1)
        out = [
            Comparison(
                "Eq1",
                self.classical_lower,
                self.ratio,
                self._le(one, rad.ratio, self.classical_lower, self.ratio),
                True,
            )
        ]
        lo = (rad.lower, self.refined_lower)
        mid = (rad.ratio, self.ratio)
        hi = (rad.upper, self.refined_upper)
        strict = r != 1
        if self.direction is Direction.REFINE:
            pairs = [("Eq10L", lo, mid, strict), ("Eq10R", mid, hi, strict and n > 1)]
        else:
            pairs = [("Eq10L", mid, lo, strict), ("Eq10R", hi, mid, strict and n > 1)]
        for ineq, (xr, xv), (yr, yv), s in pairs:
            out.append(Comparison(ineq, xv, yv, self._le(xr, yr, xv, yv), s))
        return out

    def sandwich_holds(self) -> bool:
        checks = self.comparisons()
        ok = all(c.passed for c in checks)
        if self.direction is Direction.REFINE:
            # classical <= refined lower, implied but checked on its own
            ok = ok and self._le(Fraction(1), self.radicands.lower, self.classical_lower, self.refined_lower)
        return ok


def refined_bounds(n: int, r, mode: NumericMode) -> AlzerReport:
    r = _exponent(r)
    rad = radicands(n, r, mode)
    classical = Fraction(n, n + 1)
    if not (mode.is_exact and r == 1):
        classical = mode.float_companion().scalar(classical)
    return AlzerReport(
        n=n,
        r=r,
        ratio=_root_value(n, r, rad.ratio, mode),
        refined_lower=_root_value(n, r, rad.lower, mode),
        refined_upper=_root_value(n, r, rad.upper, mode),
        classical_lower=classical,
        direction=direction_for(r),
        radicands=rad,
        mode=mode,
    )


def classical_alzer_check(n: int, r, mode: NumericMode) -> bool:
    """n/(n+1) <= Alzer ratio, compared exactly whenever r is an integer."""
    report = refined_bounds(n, r, mode)
    return report.comparisons()[0].passed


def cross_check_with_theorem(n: int, r, mode: NumericMode | None = None) -> Scalar:
    """Largest radicand-level discrepancy between the two derivations.

    Builds x^r on [0,1], takes the recursive Riemann-sum bounds on A_n from
    A_{n+1}, divides through by A_{n+1} and compares with the radicands from
    the power-sum formulas.  Zero (as a rational) for integer r.
    """
    r = _exponent(r)
    if mode is None:
        mode = NumericMode.exact() if _is_int(r) else NumericMode.floating()
    spec = Power(r)
    cur = compute_sums(spec, n, mode)
    nxt = compute_sums(spec, n + 1, mode)
    interval = bound_A_prev(spec, n, nxt)
    if classify(spec).curvature.is_convex:
        from_left, from_right = interval.lower, interval.upper
    else:
        from_left, from_right = interval.upper, interval.lower
    derived = (from_left / nxt.A, cur.A / nxt.A, from_right / nxt.A)
    direct = radicands(n, r, mode)
    diffs = [abs(to_fraction(d) - to_fraction(e)) if mode.is_exact else abs(d - mode.scalar(e))
             for d, e in zip(derived, (direct.lower, direct.ratio, direct.upper))]
    return max(diffs)

"""Numeric regimes: exact rationals or tolerance-tracked multiprecision floats.

Exact scalars are :class:`fractions.Fraction`; float scalars are mpmath ``mpf``
values bound to a private context per precision, so two modes with different
precisions never share mutable global state.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Iterable, Union

from mpmath import libmp
from mpmath.ctx_mp import MPContext

from .errors import ConfigError, ModeUnsupported, RationalOverflow, SpecParseError

EXACT = "exact"
FLOAT = "float"

DEFAULT_PRECISION = 64
DEFAULT_TOLERANCE = 1e-9
DEFAULT_MAX_DENOMINATOR_DIGITS = 10**6

Scalar = Union[Fraction, "libmp.mpf"]  # mpf from one of the cached contexts

_LOG10_2 = math.log10(2)


@lru_cache(maxsize=None)
def _context(precision: int) -> MPContext:
    ctx = MPContext()
    ctx.prec = precision
    return ctx


@lru_cache(maxsize=8)
def _power_of_ten(k: int) -> int:
    return 10**k


def is_float_scalar(x) -> bool:
    return hasattr(x, "_mpf_")


def to_fraction(x) -> Fraction:
    """Exact rational value of any scalar (an mpf is a dyadic rational)."""
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if is_float_scalar(x):
        p, q = libmp.to_rational(x._mpf_)
        return Fraction(int(p), int(q))
    if isinstance(x, float):
        return Fraction(x)
    raise TypeError(f"not a scalar: {x!r}")


def parse_rational(text: str) -> Fraction:
    """Parse ``3``, ``-0.25``, ``1e-3`` or ``3/7`` exactly."""
    try:
        return Fraction(text.strip())
    except (ValueError, ZeroDivisionError) as exc:
        raise SpecParseError(f"not a rational literal: {text!r}") from exc


def format_rational(q: Fraction) -> str:
    """Terminating decimals as decimals (``1.5``), everything else as ``p/q``."""
    q = Fraction(q)
    den = q.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{q.numerator}/{q.denominator}"
    if q.denominator == 1:
        return str(q.numerator)
    places = max(twos, fives)
    scaled = abs(q.numerator) * 10**places // q.denominator
    digits = str(scaled).rjust(places + 1, "0")
    sign = "-" if q < 0 else ""
    return f"{sign}{digits[:-places]}.{digits[-places:]}".rstrip("0")


def exact_sum(values: Iterable) -> Fraction:
    """Sum of rationals over their common denominator, reduced once."""
    fracs = [v if isinstance(v, Fraction) else Fraction(v) for v in values]
    if not fracs:
        return Fraction(0)
    den = math.lcm(*(q.denominator for q in fracs))
    return Fraction(sum(q.numerator * (den // q.denominator) for q in fracs), den)


class CompensatedSum:
    """Running Neumaier sum; works for any round-to-nearest float type."""

    __slots__ = ("_s", "_c")

    def __init__(self, zero):
        self._s = zero
        self._c = zero

    def add(self, v) -> None:
        s = self._s
        t = s + v
        if abs(s) >= abs(v):
            self._c += (s - t) + v
        else:
            self._c += (v - t) + s
        self._s = t

    @property
    def value(self):
        return self._s + self._c


def compensated_sum(values: Iterable, zero):
    acc = CompensatedSum(zero)
    for v in values:
        acc.add(v)
    return acc.value


@dataclass(frozen=True)
class NumericMode:
    """Arithmetic regime plus the comparison rule that goes with it.

    In float mode ``x <= y`` passes iff ``x <= y + tol * max(1, |x|, |y|)``;
    a strict comparison additionally needs the gap to exceed that slack.
    """

    regime: str = FLOAT
    precision: int | None = DEFAULT_PRECISION
    tolerance: float = DEFAULT_TOLERANCE
    max_denominator_digits: int = DEFAULT_MAX_DENOMINATOR_DIGITS

    def __post_init__(self):
        if self.regime == EXACT:
            if self.tolerance != 0:
                raise ConfigError("exact mode requires tolerance 0")
            if self.precision is not None:
                raise ConfigError("exact mode takes no precision")
        elif self.regime == FLOAT:
            if self.precision is None or self.precision < 53:
                raise ConfigError("float mode needs precision >= 53 bits")
            if not (self.tolerance > 0 and math.isfinite(self.tolerance)):
                raise ConfigError("float mode needs a positive finite tolerance")
        else:
            raise ConfigError(f"unknown regime {self.regime!r}")
        if self.max_denominator_digits < 1:
            raise ConfigError("max_denominator_digits must be positive")

    @classmethod
    def exact(cls, max_denominator_digits: int = DEFAULT_MAX_DENOMINATOR_DIGITS) -> "NumericMode":
        return cls(EXACT, None, 0, max_denominator_digits)

    @classmethod
    def floating(
        cls, precision: int = DEFAULT_PRECISION, tolerance: float = DEFAULT_TOLERANCE
    ) -> "NumericMode":
        return cls(FLOAT, precision, tolerance)

    @property
    def is_exact(self) -> bool:
        return self.regime == EXACT

    @property
    def ctx(self) -> MPContext:
        return _context(self.precision or DEFAULT_PRECISION)

    def float_companion(self) -> "NumericMode":
        """The float mode used when this mode cannot represent a value exactly."""
        if self.is_exact:
            return NumericMode.floating()
        return self

    # -- conversion -------------------------------------------------------

    def scalar(self, value) -> Scalar:
        if self.is_exact:
            if is_float_scalar(value):
                raise ModeUnsupported("float value in exact mode")
            if isinstance(value, (int, Fraction)):
                return Fraction(value)
            if isinstance(value, float):
                return Fraction(value)
            raise ModeUnsupported(f"cannot represent {value!r} exactly")
        ctx = self.ctx
        if is_float_scalar(value):
            return ctx.make_mpf(libmp.mpf_pos(value._mpf_, ctx.prec, libmp.round_nearest))
        if isinstance(value, Fraction):
            p, q = value.numerator, value.denominator
            return ctx.make_mpf(libmp.from_rational(p, q, ctx.prec, libmp.round_nearest))
        return ctx.mpf(value)

    def zero(self) -> Scalar:
        return self.scalar(0)

    def sum(self, values: Iterable) -> Scalar:
        if self.is_exact:
            total = exact_sum(values)
            self.check_denominator(total)
            return total
        return compensated_sum(values, self.zero())

    def check_denominator(self, x: Fraction) -> None:
        if not self.is_exact:
            return
        den, limit = x.denominator, self.max_denominator_digits
        estimate = den.bit_length() * _LOG10_2
        if estimate < limit - 1:
            return
        if den >= _power_of_ten(limit):
            raise RationalOverflow(f"denominator has ~{int(estimate) + 1} digits, limit {limit}")

    # -- comparison -------------------------------------------------------

    def _slack(self, x, y):
        ctx = self.ctx
        return ctx.mpf(self.tolerance) * max(ctx.mpf(1), abs(x), abs(y))

    def le(self, x, y) -> bool:
        if self.is_exact:
            return to_fraction(x) <= to_fraction(y)
        x, y = self.scalar(x), self.scalar(y)
        return x <= y + self._slack(x, y)

    def lt(self, x, y) -> bool:
        """Strict comparison: exact ``<`` or a gap beyond the tolerance slack."""
        if self.is_exact:
            return to_fraction(x) < to_fraction(y)
        x, y = self.scalar(x), self.scalar(y)
        return y - x > self._slack(x, y)

    def eq(self, x, y) -> bool:
        return self.le(x, y) and self.le(y, x)

    # -- rendering --------------------------------------------------------

    def format(self, x) -> str:
        if self.is_exact:
            if not is_float_scalar(x):
                return str(Fraction(x))
            return self.float_companion().format(x)
        ctx = self.ctx
        digits = max(15, int(ctx.prec * _LOG10_2))
        text = ctx.nstr(self.scalar(x), digits)
        if text.endswith(".0"):
            text = text[:-2]
        return "0" if text == "-0" else text

    def describe(self) -> str:
        if self.is_exact:
            return "exact"
        return f"float{self.precision}(tol={self.tolerance:g})"

"""Closed-form functions on a closed interval and their certified shape.

Every kind here has its curvature and monotonicity decided analytically, so the
inequality modules can choose the convex or concave direction without sampling.

Text grammar (used by the CLI)::

    pow:r=<real> | exp | affine:m=<real>,c=<real> | pwl:(x0,y0);(x1,y1);... | neg:<spec>

optionally followed by ``@[a,b]``.  Literals are parsed exactly, so ``3/7`` and
``0.1`` are the rationals they spell.
"""

from __future__ import annotations

import bisect
import re
from dataclasses import dataclass
from functools import cached_property
from enum import Enum
from fractions import Fraction

from .errors import ModeUnsupported, OutOfDomain, SpecParseError, UnclassifiablePiecewise
from .numeric import NumericMode, Scalar, format_rational, is_float_scalar, parse_rational


@dataclass(frozen=True)
class Interval:
    a: Fraction
    b: Fraction

    def __post_init__(self):
        object.__setattr__(self, "a", Fraction(self.a))
        object.__setattr__(self, "b", Fraction(self.b))
        if not self.a < self.b:
            raise ValueError(f"interval needs a < b, got [{self.a}, {self.b}]")

    @property
    def length(self) -> Fraction:
        return self.b - self.a

    def __str__(self) -> str:
        return f"[{format_rational(self.a)},{format_rational(self.b)}]"


UNIT = Interval(Fraction(0), Fraction(1))


class Curvature(Enum):
    CONVEX = "convex"
    STRICTLY_CONVEX = "strictly_convex"
    CONCAVE = "concave"
    STRICTLY_CONCAVE = "strictly_concave"
    AFFINE = "affine"

    @property
    def is_convex(self) -> bool:
        return self in (Curvature.CONVEX, Curvature.STRICTLY_CONVEX, Curvature.AFFINE)

    @property
    def is_concave(self) -> bool:
        return self in (Curvature.CONCAVE, Curvature.STRICTLY_CONCAVE, Curvature.AFFINE)

    @property
    def is_strict(self) -> bool:
        return self in (Curvature.STRICTLY_CONVEX, Curvature.STRICTLY_CONCAVE)

    def reflected(self) -> "Curvature":
        return _REFLECT[self]


_REFLECT = {
    Curvature.CONVEX: Curvature.CONCAVE,
    Curvature.CONCAVE: Curvature.CONVEX,
    Curvature.STRICTLY_CONVEX: Curvature.STRICTLY_CONCAVE,
    Curvature.STRICTLY_CONCAVE: Curvature.STRICTLY_CONVEX,
    Curvature.AFFINE: Curvature.AFFINE,
}


@dataclass(frozen=True)
class ShapeClass:
    """Curvature and monotonicity of a spec.

    ``decreasing`` is tracked alongside ``increasing`` so that negation can
    flip monotonicity only when the inner function really is monotone.
    """

    curvature: Curvature
    increasing: bool
    decreasing: bool = False
    certified: bool = True


# -- function kinds ------------------------------------------------------------


class FunctionSpec:
    """Base for the closed-form kinds; instances are immutable."""

    domain: Interval

    @property
    def a(self) -> Fraction:
        return self.domain.a

    @property
    def b(self) -> Fraction:
        return self.domain.b

    def supports_exact(self) -> bool:
        raise NotImplementedError

    def __str__(self) -> str:
        return format_spec(self)


@dataclass(frozen=True)
class Power(FunctionSpec):
    """x**r on a nonnegative interval."""

    r: Fraction
    domain: Interval = UNIT

    def __post_init__(self):
        object.__setattr__(self, "r", Fraction(self.r))
        if self.r <= 0:
            raise ValueError("power exponent must be positive")
        if self.domain.a < 0:
            raise ValueError("power functions are only defined on [a,b] with a >= 0")

    def supports_exact(self) -> bool:
        return self.r.denominator == 1


@dataclass(frozen=True)
class Exp(FunctionSpec):
    domain: Interval = UNIT

    def supports_exact(self) -> bool:
        return False


@dataclass(frozen=True)
class Affine(FunctionSpec):
    slope: Fraction
    intercept: Fraction
    domain: Interval = UNIT

    def __post_init__(self):
        object.__setattr__(self, "slope", Fraction(self.slope))
        object.__setattr__(self, "intercept", Fraction(self.intercept))

    def supports_exact(self) -> bool:
        return True


@dataclass(frozen=True)
class PiecewiseLinear(FunctionSpec):
    points: tuple[tuple[Fraction, Fraction], ...]
    domain: Interval = None  # derived from the breakpoints when omitted

    def __post_init__(self):
        pts = tuple((Fraction(x), Fraction(y)) for x, y in self.points)
        if len(pts) < 2:
            raise ValueError("piecewise-linear spec needs at least 2 breakpoints")
        xs = [x for x, _ in pts]
        if any(x0 >= x1 for x0, x1 in zip(xs, xs[1:])):
            raise ValueError("breakpoints must be strictly increasing in x")
        object.__setattr__(self, "points", pts)
        span = Interval(xs[0], xs[-1])
        if self.domain is None:
            object.__setattr__(self, "domain", span)
        elif self.domain != span:
            raise ValueError(f"breakpoints span {span}, not the declared domain {self.domain}")

    @property
    def slopes(self) -> list[Fraction]:
        return [(y1 - y0) / (x1 - x0) for (x0, y0), (x1, y1) in zip(self.points, self.points[1:])]

    @cached_property
    def segments(self) -> tuple[list[Fraction], list[tuple[Fraction, Fraction]]]:
        """Breakpoint abscissae and the (slope, intercept) of each piece."""
        xs = [x for x, _ in self.points]
        lines = [(m, y0 - m * x0) for m, (x0, y0) in zip(self.slopes, self.points)]
        return xs, lines

    def supports_exact(self) -> bool:
        return True


@dataclass(frozen=True)
class Negated(FunctionSpec):
    inner: FunctionSpec

    @property
    def domain(self) -> Interval:  # type: ignore[override]
        return self.inner.domain

    def supports_exact(self) -> bool:
        return self.inner.supports_exact()


# -- evaluation -----------------------------------------------------------------


def _check_domain(spec: FunctionSpec, x, mode: NumericMode) -> None:
    if is_float_scalar(x):
        inside = mode.scalar(spec.a) <= x <= mode.scalar(spec.b)
    else:
        inside = spec.a <= x <= spec.b
    if not inside:
        raise OutOfDomain(f"x={x} outside {spec.domain}")


def evaluate(spec: FunctionSpec, x, mode: NumericMode) -> Scalar:
    """f(x) in the given numeric regime.

    Exact mode requires rational ``x`` and a kind whose values stay rational
    (integer powers, affine, piecewise linear); anything else raises
    :class:`ModeUnsupported`.
    """
    if not is_float_scalar(x):
        x = Fraction(x)
    _check_domain(spec, x, mode)
    if mode.is_exact and not spec.supports_exact():
        raise ModeUnsupported(f"{format_spec(spec)} has irrational values; use float mode")
    return _eval(spec, x, mode)


def evaluate_unchecked(spec: FunctionSpec, x, mode: NumericMode) -> Scalar:
    """evaluate() without the domain and mode checks, for callers that did them."""
    return _eval(spec, x, mode)


def _eval(spec: FunctionSpec, x, mode: NumericMode) -> Scalar:
    if isinstance(spec, Negated):
        return -_eval(spec.inner, x, mode)
    if mode.is_exact:
        return _eval_exact(spec, x)
    ctx = mode.ctx
    xs = mode.scalar(x)
    if isinstance(spec, Power):
        if spec.r.denominator == 1:
            return xs ** int(spec.r)
        return ctx.power(xs, mode.scalar(spec.r))
    if isinstance(spec, Exp):
        return ctx.exp(xs)
    if isinstance(spec, Affine):
        return mode.scalar(spec.slope) * xs + mode.scalar(spec.intercept)
    if isinstance(spec, PiecewiseLinear):
        if not is_float_scalar(x):
            return mode.scalar(_eval_exact(spec, x))
        return _pwl_float(spec, xs, mode)
    raise TypeError(f"unknown function kind {type(spec).__name__}")


def _eval_exact(spec: FunctionSpec, x: Fraction) -> Fraction:
    if isinstance(spec, Power):
        return x ** int(spec.r)
    if isinstance(spec, Affine):
        return spec.slope * x + spec.intercept
    if isinstance(spec, PiecewiseLinear):
        xs, lines = spec.segments
        slope, intercept = lines[min(max(bisect.bisect_right(xs, x) - 1, 0), len(lines) - 1)]
        return slope * x + intercept
    raise ModeUnsupported(f"{type(spec).__name__} is float-only")


def _pwl_float(spec: PiecewiseLinear, x, mode: NumericMode):
    xs = [mode.scalar(p[0]) for p in spec.points]
    i = min(max(bisect.bisect_right(xs, x) - 1, 0), len(xs) - 2)
    (x0, y0), (x1, y1) = spec.points[i], spec.points[i + 1]
    return mode.scalar(y0) + mode.scalar((y1 - y0) / (x1 - x0)) * (x - mode.scalar(x0))


# -- classification -------------------------------------------------------------


def monotonicity(spec: FunctionSpec) -> tuple[bool, bool]:
    """(increasing, decreasing) on the whole domain, both True for constants."""
    if isinstance(spec, (Power, Exp)):
        return True, False
    if isinstance(spec, Affine):
        return spec.slope >= 0, spec.slope <= 0
    if isinstance(spec, PiecewiseLinear):
        slopes = spec.slopes
        return all(s >= 0 for s in slopes), all(s <= 0 for s in slopes)
    if isinstance(spec, Negated):
        inc, dec = monotonicity(spec.inner)
        return dec, inc
    raise TypeError(f"unknown function kind {type(spec).__name__}")


def classify(spec: FunctionSpec) -> ShapeClass:
    if isinstance(spec, Power):
        if spec.r > 1:
            curvature = Curvature.STRICTLY_CONVEX
        elif spec.r == 1:
            curvature = Curvature.AFFINE
        else:
            curvature = Curvature.STRICTLY_CONCAVE
        return ShapeClass(curvature, increasing=True)
    if isinstance(spec, Exp):
        return ShapeClass(Curvature.STRICTLY_CONVEX, increasing=True)
    if isinstance(spec, Affine):
        return ShapeClass(Curvature.AFFINE, increasing=spec.slope >= 0, decreasing=spec.slope <= 0)
    if isinstance(spec, PiecewiseLinear):
        return _classify_pwl(spec)
    if isinstance(spec, Negated):
        inner = classify(spec.inner)
        return ShapeClass(
            inner.curvature.reflected(),
            increasing=inner.decreasing,
            decreasing=inner.increasing,
            certified=inner.certified,
        )
    raise TypeError(f"unknown function kind {type(spec).__name__}")


def _classify_pwl(spec: PiecewiseLinear) -> ShapeClass:
    slopes = spec.slopes
    pairs = list(zip(slopes, slopes[1:]))
    if all(s0 == s1 for s0, s1 in pairs):
        curvature = Curvature.AFFINE
    elif all(s0 <= s1 for s0, s1 in pairs):
        curvature = Curvature.CONVEX
    elif all(s0 >= s1 for s0, s1 in pairs):
        curvature = Curvature.CONCAVE
    else:
        raise UnclassifiablePiecewise(
            f"{format_spec(spec)}: slopes {[format_rational(s) for s in slopes]} change direction"
        )
    increasing, decreasing = monotonicity(spec)
    return ShapeClass(curvature, increasing, decreasing)


# -- text grammar ---------------------------------------------------------------

_DOMAIN_RE = re.compile(r"^(?P<body>.*)@\[(?P<a>[^,\]]+),(?P<b>[^\]]+)\]$")
_POINT_RE = re.compile(r"^\(([^,()]+),([^,()]+)\)$")


def parse_spec(text: str) -> FunctionSpec:
    """Parse the CLI grammar; missing ``@[a,b]`` means [0,1] (pwl: its own span)."""
    src = "".join(text.split())
    domain = None
    m = _DOMAIN_RE.match(src)
    if m:
        body = m.group("body")
        try:
            domain = Interval(parse_rational(m.group("a")), parse_rational(m.group("b")))
        except ValueError as exc:
            raise SpecParseError(f"{text!r}: {exc}") from exc
    else:
        body = src
    try:
        return _parse_body(body, domain)
    except SpecParseError:
        raise
    except ValueError as exc:
        raise SpecParseError(f"{text!r}: {exc}") from exc


def _parse_body(body: str, domain: Interval | None) -> FunctionSpec:
    kind, _, args = body.partition(":")
    if kind == "neg":
        if not args:
            raise SpecParseError("neg: needs an inner spec")
        return Negated(_parse_body(args, domain))
    if kind == "exp":
        if args:
            raise SpecParseError(f"exp takes no arguments, got {args!r}")
        return Exp(domain or UNIT)
    if kind == "pow":
        params = _params(args, {"r"})
        return Power(params["r"], domain or UNIT)
    if kind == "affine":
        params = _params(args, {"m", "c"})
        return Affine(params["m"], params["c"], domain or UNIT)
    if kind == "pwl":
        points = []
        for chunk in args.split(";"):
            pm = _POINT_RE.match(chunk)
            if not pm:
                raise SpecParseError(f"bad breakpoint {chunk!r}; expected (x,y)")
            points.append((parse_rational(pm.group(1)), parse_rational(pm.group(2))))
        return PiecewiseLinear(tuple(points), domain)
    raise SpecParseError(f"unknown function kind {kind!r}")


def _params(args: str, names: set[str]) -> dict[str, Fraction]:
    out = {}
    for item in filter(None, args.split(",")):
        key, eq, value = item.partition("=")
        if not eq or key not in names or key in out:
            raise SpecParseError(f"bad parameter {item!r}; expected {sorted(names)}")
        out[key] = parse_rational(value)
    missing = names - out.keys()
    if missing:
        raise SpecParseError(f"missing parameter(s) {sorted(missing)}")
    return out


def format_spec(spec: FunctionSpec) -> str:
    """Canonical text form; ``parse_spec(format_spec(s)) == s``."""
    return f"{_format_body(spec)}@{spec.domain}"


def _format_body(spec: FunctionSpec) -> str:
    f = format_rational
    if isinstance(spec, Negated):
        return "neg:" + _format_body(spec.inner)
    if isinstance(spec, Power):
        return f"pow:r={f(spec.r)}"
    if isinstance(spec, Exp):
        return "exp"
    if isinstance(spec, Affine):
        return f"affine:m={f(spec.slope)},c={f(spec.intercept)}"
    if isinstance(spec, PiecewiseLinear):
        return "pwl:" + ";".join(f"({f(x)},{f(y)})" for x, y in spec.points)
    raise TypeError(f"unknown function kind {type(spec).__name__}")

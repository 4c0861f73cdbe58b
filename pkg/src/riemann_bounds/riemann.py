"""Right- and left-endpoint Riemann sums on the uniform grid."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .functions import FunctionSpec, Interval, evaluate, evaluate_unchecked
from .numeric import NumericMode, Scalar

MAX_N = 10**7


@dataclass(frozen=True)
class UniformPartition:
    interval: Interval
    n: int

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 1:
            raise ValueError(f"n must be a natural number >= 1, got {self.n!r}")
        if self.n > MAX_N:
            raise ValueError(f"n={self.n} exceeds the per-call cap {MAX_N}")

    @property
    def step(self) -> Fraction:
        return self.interval.length / self.n

    def node(self, i: int) -> Fraction:
        # multiply before dividing; i = 0 and i = n land exactly on a and b
        a, b = self.interval.a, self.interval.b
        return a + i * (b - a) / self.n

    @property
    def nodes(self) -> list[Fraction]:
        # x_i = (p t n + i s q) / (q t n) with a = p/q, b - a = s/t
        a, length, n = self.interval.a, self.interval.length, self.n
        p, q, s, t = a.numerator, a.denominator, length.numerator, length.denominator
        base, step, den = p * t * n, s * q, q * t * n
        return [Fraction(base + i * step, den) for i in range(n + 1)]


@dataclass(frozen=True)
class EndpointSums:
    """A_n (right endpoints) and B_n (left endpoints) for one n."""

    n: int
    A: Scalar
    B: Scalar
    mode: NumericMode
    partition: UniformPartition


def compute_sums(spec: FunctionSpec, n: int, mode: NumericMode) -> EndpointSums:
    """A_n = (b-a)/n * sum f(x_1..x_n) and B_n = (b-a)/n * sum f(x_0..x_{n-1}).

    Results are memoized; specs and modes are immutable, so this is pure.
    """
    return _compute_sums(spec, n, mode)


@lru_cache(maxsize=16384)
def _compute_sums(spec: FunctionSpec, n: int, mode: NumericMode) -> EndpointSums:
    part = UniformPartition(spec.domain, n)
    nodes = part.nodes
    # endpoints carry the domain and mode checks; interior nodes are inside by construction
    f_a = evaluate(spec, nodes[0], mode)
    f_b = evaluate(spec, nodes[-1], mode)
    values = [f_a] + [evaluate_unchecked(spec, x, mode) for x in nodes[1:-1]] + [f_b]
    h = mode.scalar(part.step)
    # f(x_1..x_{n-1}) is shared by both sums
    inner = mode.sum(values[1:-1])
    A = h * (inner + values[-1])
    B = h * (inner + values[0])
    if mode.is_exact:
        mode.check_denominator(A)
        mode.check_denominator(B)
    return EndpointSums(n, A, B, mode, part)


def difference_identity(sums: EndpointSums, spec: FunctionSpec) -> Scalar:
    """Residual (A_n - B_n) - (b-a)[f(b) - f(a)]/n; exactly zero in exact mode."""
    mode = sums.mode
    fa = evaluate(spec, spec.a, mode)
    fb = evaluate(spec, spec.b, mode)
    expected = mode.scalar(spec.domain.length) * (fb - fa) / sums.n
    return (sums.A - sums.B) - expected


def sums_range(spec: FunctionSpec, n_min: int, n_max: int, mode: NumericMode) -> dict[int, EndpointSums]:
    """compute_sums for every n in [n_min, n_max], keyed by n."""
    return {n: compute_sums(spec, n, mode) for n in range(n_min, n_max + 1)}

"""Endpoint Riemann sums of convex functions, recursive bounds and refined Alzer inequalities."""

from .alzer import (
    AlzerReport,
    Direction,
    PowerSum,
    alzer_radicand,
    alzer_ratio,
    classical_alzer_check,
    cross_check_with_theorem,
    power_sum,
    refined_bounds,
)
from .bounds import (
    BoundInterval,
    BoundSource,
    MonotonicityVerdict,
    bound_A_prev,
    bound_B_prev,
    bracket_integral,
    cap_A,
    cap_B,
    check_monotonicity,
    endpoint_range,
)
from .errors import (
    ConfigError,
    HypothesisNotMet,
    ModeUnsupported,
    OutOfDomain,
    RationalOverflow,
    RiemannBoundsError,
    SpecParseError,
    UnclassifiablePiecewise,
)
from .functions import (
    Affine,
    Curvature,
    Exp,
    FunctionSpec,
    Interval,
    Negated,
    PiecewiseLinear,
    Power,
    ShapeClass,
    classify,
    evaluate,
    format_spec,
    parse_spec,
)
from .numeric import NumericMode
from .riemann import EndpointSums, UniformPartition, compute_sums, difference_identity

__version__ = "0.1.0"

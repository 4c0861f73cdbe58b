"""Exception hierarchy shared by every module and mapped to CLI exit codes."""


class RiemannBoundsError(Exception):
    """Base class for all package errors."""

    exit_code = 1


class SpecParseError(RiemannBoundsError, ValueError):
    exit_code = 2


class OutOfDomain(RiemannBoundsError, ValueError):
    exit_code = 2


class ModeUnsupported(RiemannBoundsError):
    """Exact arithmetic requested for a value that is not rational."""

    exit_code = 3


class ConfigError(RiemannBoundsError, ValueError):
    """Inconsistent numeric mode / tolerance combination."""

    exit_code = 3


class RationalOverflow(RiemannBoundsError, ArithmeticError):
    """An exact denominator grew past the configured digit limit."""

    exit_code = 3


class UnclassifiablePiecewise(RiemannBoundsError):
    """Piecewise-linear slopes are neither nondecreasing nor nonincreasing."""

    exit_code = 4


class HypothesisNotMet(RiemannBoundsError):
    """A theorem was applied to a function outside its hypothesis."""

    exit_code = 4

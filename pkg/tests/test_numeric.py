from fractions import Fraction

import pytest

from riemann_bounds import ConfigError, ModeUnsupported, NumericMode, RationalOverflow
from riemann_bounds.numeric import compensated_sum, format_rational, parse_rational, to_fraction


def test_exact_mode_has_zero_tolerance():
    with pytest.raises(ConfigError):
        NumericMode("exact", None, 1e-9)


@pytest.mark.parametrize("tol", [0, -1e-9, float("inf")])
def test_float_mode_needs_positive_tolerance(tol):
    with pytest.raises(ConfigError):
        NumericMode.floating(64, tol)


def test_float_precision_at_least_53_bits():
    with pytest.raises(ConfigError):
        NumericMode.floating(precision=24)
    assert NumericMode.floating(precision=53).precision == 53


def test_float_comparison_slack(flt):
    assert flt.le(1 + 1e-10, 1)
    assert not flt.le(1 + 1e-8, 1)
    assert not flt.lt(1, 1 + 1e-10)
    assert flt.lt(1, 1 + 1e-8)
    # the slack scales with magnitude
    assert flt.le(1e6 + 1e-4, 1e6)


def test_exact_comparison_has_no_slack(exact):
    tiny = Fraction(1, 10**40)
    assert not exact.le(1 + tiny, 1)
    assert exact.lt(1, 1 + tiny)


def test_exact_mode_rejects_float_scalars(exact, flt):
    with pytest.raises(ModeUnsupported):
        exact.scalar(flt.scalar(1))


def test_fraction_conversion_is_correctly_rounded(flt):
    x = flt.scalar(Fraction(1, 3))
    err = abs(to_fraction(x) - Fraction(1, 3))
    assert err <= Fraction(1, 2**65)


def test_compensated_sum_beats_naive_summation():
    values = [1.0, 1e100, 1.0, -1e100] * 1000
    assert compensated_sum(values, 0.0) == 2000.0
    assert sum(values) != 2000.0


def test_denominator_cap():
    mode = NumericMode.exact(max_denominator_digits=5)
    mode.check_denominator(Fraction(1, 99999))
    with pytest.raises(RationalOverflow):
        mode.check_denominator(Fraction(1, 10**7))


@pytest.mark.parametrize(
    "q, text",
    [(Fraction(3, 2), "1.5"), (Fraction(-1, 4), "-0.25"), (Fraction(3, 7), "3/7"),
     (Fraction(10), "10"), (Fraction(1, 10), "0.1"), (Fraction(0), "0")],
)
def test_format_rational(q, text):
    assert format_rational(q) == text
    assert parse_rational(text) == q


def test_format_renders_exact_fractions_and_trimmed_floats(exact, flt):
    assert exact.format(Fraction(5, 8)) == "5/8"
    assert flt.format(flt.scalar(Fraction(5, 8))) == "0.625"
    assert flt.format(flt.scalar(6)) == "6"

"""Command-line front end.

Usage:
    riemann-bounds sums "pow:r=2@[0,1]" --n 1..10 [--mode exact]
    riemann-bounds bounds "neg:pow:r=2@[0,1]" --n 2
    riemann-bounds alzer --n 1..100 --r 1,2,3,0.5
    riemann-bounds verify all [--mode exact] [--jobs 4]

Exit codes: 0 pass, 1 inequality violation, 2 parse error, 3 mode/tolerance
error, 4 classification error.
"""

from __future__ import annotations

import functools
import sys
from dataclasses import dataclass
from fractions import Fraction

import click

from . import alzer
from .errors import ConfigError, RiemannBoundsError, SpecParseError
from .functions import format_spec, parse_spec
from .numeric import DEFAULT_PRECISION, DEFAULT_TOLERANCE, NumericMode, format_rational, parse_rational
from .records import CSV_FIELDS, render, summarize
from .riemann import compute_sums, difference_identity
from .verify import SUITES, mode_for, run_suite, summary_ids, theorem21_records

EXIT_OK, EXIT_VIOLATION = 0, 1
MODE_ENV = "RIEMANN_BOUNDS_MODE"

SUMS_FIELDS = ("spec", "n", "mode", "A", "B", "residual")
ALZER_FIELDS = ("n", "r", "direction", "classical", "lower", "ratio", "upper", "pass")
SUMMARY_FIELDS = ("summary", "checks", "violations", "worst_gap")


@dataclass(frozen=True)
class RunConfig:
    mode: NumericMode
    output_format: str
    seed: int = 0  # reserved for sampled checks


def parse_n_grid(text: str) -> list[int]:
    """``5``, ``1..500`` and comma lists of either; sorted, deduplicated."""
    out: set[int] = set()
    for part in filter(None, (p.strip() for p in text.split(","))):
        lo, dots, hi = part.partition("..")
        try:
            lo_i = int(lo)
            hi_i = int(hi) if dots else lo_i
        except ValueError as exc:
            raise SpecParseError(f"bad n value {part!r}") from exc
        if lo_i < 1 or hi_i < lo_i:
            raise SpecParseError(f"bad n range {part!r}; need 1 <= lo <= hi")
        out.update(range(lo_i, hi_i + 1))
    if not out:
        raise SpecParseError("empty n grid")
    return sorted(out)


def parse_r_list(text: str) -> list[Fraction]:
    values = [parse_rational(p) for p in text.split(",") if p.strip()]
    if not values or any(r <= 0 for r in values):
        raise SpecParseError(f"r values must be positive: {text!r}")
    return values


def build_mode(mode: str, tolerance: float | None, precision: int) -> NumericMode:
    if mode == "exact":
        return NumericMode.exact() if not tolerance else NumericMode("exact", None, tolerance)
    tol = DEFAULT_TOLERANCE if tolerance is None else tolerance
    return NumericMode.floating(precision, tol)


def run_options(f):
    @click.option("--mode", type=click.Choice(["float", "exact"]), envvar=MODE_ENV,
                  default="float", show_default=True, help=f"numeric regime (env {MODE_ENV})")
    @click.option("--tolerance", type=float, default=None,
                  help="float comparison tolerance (default 1e-9; must be 0/unset in exact mode)")
    @click.option("--precision", type=int, default=DEFAULT_PRECISION, show_default=True,
                  help="float significand bits")
    @click.option("--format", "output_format", type=click.Choice(["table", "jsonl", "csv"]),
                  default=None, help="default: table on a terminal, jsonl when piped")
    @click.option("--seed", type=int, default=0, help="reserved for sampled checks")
    @functools.wraps(f)
    def wrapper(mode, tolerance, precision, output_format, seed, **kwargs):
        try:
            cfg = RunConfig(
                build_mode(mode, tolerance, precision),
                output_format or ("table" if sys.stdout.isatty() else "jsonl"),
                seed,
            )
            code = f(cfg, **kwargs)
        except RiemannBoundsError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(exc.exit_code)
        except ValueError as exc:
            click.echo(f"error: {exc}", err=True)
            sys.exit(2)
        sys.exit(code or EXIT_OK)

    return wrapper


@click.group()
def main():
    """Endpoint Riemann sums, recursive convexity bounds and refined Alzer inequalities."""


@main.command()
@click.argument("spec_text")
@click.option("--n", "n_text", default="1..10", show_default=True, help="n grid, e.g. 1..500 or 2,4,8")
@run_options
def sums(cfg: RunConfig, spec_text: str, n_text: str) -> int:
    """Right (A_n) and left (B_n) endpoint sums with the difference-identity residual."""
    spec = parse_spec(spec_text)
    mode = cfg.mode
    rows = []
    for n in parse_n_grid(n_text):
        s = compute_sums(spec, n, mode)
        rows.append({
            "spec": format_spec(spec), "n": n, "mode": mode.describe(),
            "A": mode.format(s.A), "B": mode.format(s.B),
            "residual": mode.format(difference_identity(s, spec)),
        })
    click.echo(render(rows, SUMS_FIELDS, cfg.output_format), nl=False)
    return EXIT_OK


@main.command()
@click.argument("spec_text")
@click.option("--n", "n_text", default="1", show_default=True, help="n grid")
@run_options
def bounds(cfg: RunConfig, spec_text: str, n_text: str) -> int:
    """Recursive bounds on A_n, B_n from the (n+1)-sums, plus caps on A_{n+1}, B_{n+1}."""
    spec = parse_spec(spec_text)
    if cfg.mode.is_exact and not spec.supports_exact():
        # surface ModeUnsupported rather than silently switching regimes
        compute_sums(spec, 1, cfg.mode)
    records = theorem21_records(spec, parse_n_grid(n_text), mode_for(spec, cfg.mode))
    rows = [r.to_json_dict() for r in records]
    click.echo(render(rows, CSV_FIELDS, cfg.output_format), nl=False)
    return EXIT_OK if all(r.passed for r in records) else EXIT_VIOLATION


@main.command(name="alzer")
@click.option("--n", "n_text", default="1..100", show_default=True, help="n grid")
@click.option("--r", "r_text", default="1,2,3,0.5", show_default=True, help="comma list of exponents")
@run_options
def alzer_cmd(cfg: RunConfig, n_text: str, r_text: str) -> int:
    """Classical and refined Alzer bounds around the power-sum ratio."""
    mode = cfg.mode
    rows, ok = [], True
    for n in parse_n_grid(n_text):
        for r in parse_r_list(r_text):
            report = alzer.refined_bounds(n, r, mode)
            passed = report.sandwich_holds()
            ok = ok and passed
            rows.append({
                "n": n, "r": format_rational(r), "direction": report.direction.value,
                "classical": mode.format(report.classical_lower),
                "lower": mode.format(report.refined_lower),
                "ratio": mode.format(report.ratio),
                "upper": mode.format(report.refined_upper),
                "pass": passed,
            })
    click.echo(render(rows, ALZER_FIELDS, cfg.output_format), nl=False)
    return EXIT_OK if ok else EXIT_VIOLATION


@main.command()
@click.argument("suite", type=click.Choice(SUITES))
@click.option("--n", "n_text", default="1..100", show_default=True, help="n grid")
@click.option("--r", "r_text", default="1,2,3,0.5", show_default=True, help="exponents for corollary23")
@click.option("--jobs", type=int, default=1, show_default=True, help="worker threads")
@click.option("--all-records", is_flag=True, help="emit every record, not only violations")
@run_options
def verify(cfg: RunConfig, suite: str, n_text: str, r_text: str, jobs: int, all_records: bool) -> int:
    """Run a property suite over the built-in corpus; exit 0 iff nothing fails."""
    if jobs < 1:
        raise ConfigError("--jobs must be >= 1")
    records = run_suite(suite, cfg.mode, parse_n_grid(n_text), parse_r_list(r_text), jobs)
    shown = records if all_records else [r for r in records if not r.passed]
    summaries = summarize(records, summary_ids(records))
    fmt = cfg.output_format
    if shown:
        click.echo(render([r.to_json_dict() for r in shown], CSV_FIELDS, fmt), nl=False)
    summary_rows = [s.to_json_dict() for s in summaries]
    if fmt == "csv":
        # keep stdout a single CSV table
        click.echo(render(summary_rows, SUMMARY_FIELDS, "table"), nl=False, err=True)
    else:
        click.echo(render(summary_rows, SUMMARY_FIELDS, fmt), nl=False)
    return EXIT_VIOLATION if any(not r.passed for r in records) else EXIT_OK


if __name__ == "__main__":
    main()

"""Verification records and their JSON Lines / CSV / table encodings.

Every scalar is carried as a decimal string (``p/q`` for exact values), so the
encodings are platform independent and diff cleanly between runs.
"""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .numeric import NumericMode, Scalar, to_fraction

INEQUALITY_IDS = (
    "Eq1", "Eq3L", "Eq3R", "Eq4L", "Eq4R", "Eq5", "Eq6",
    "Eq7", "Eq8", "Eq9", "Eq10L", "Eq10R",
)
# exact identities checked by the ``identities`` suite; pass means equality
IDENTITY_IDS = ("IdDiff", "IdNeg")

CSV_FIELDS = ("ineq", "spec", "n", "r", "lhs", "rhs", "pass", "gap", "strict")


@dataclass(frozen=True)
class VerificationRecord:
    ineq: str
    spec: str
    n: int
    r: str | None
    lhs: str
    rhs: str
    passed: bool
    gap: str
    strict: bool
    gap_value: Fraction = field(default=Fraction(0), compare=False, repr=False)

    @classmethod
    def build(cls, ineq, spec, n, r, lhs: Scalar, rhs: Scalar, passed, strict, mode: NumericMode):
        gap = rhs - lhs
        return cls(
            ineq, spec, n, r, mode.format(lhs), mode.format(rhs),
            bool(passed), mode.format(gap), bool(strict), to_fraction(gap),
        )

    def to_json_dict(self) -> dict:
        return {
            "ineq": self.ineq, "spec": self.spec, "n": self.n, "r": self.r,
            "lhs": self.lhs, "rhs": self.rhs, "pass": self.passed,
            "gap": self.gap, "strict": self.strict,
        }

    @classmethod
    def from_json_dict(cls, d: dict) -> "VerificationRecord":
        return cls(d["ineq"], d["spec"], int(d["n"]), d["r"], d["lhs"], d["rhs"],
                   bool(d["pass"]), d["gap"], bool(d["strict"]))

    def to_csv_row(self) -> dict:
        row = self.to_json_dict()
        row["r"] = "" if self.r is None else self.r
        row["pass"] = "true" if self.passed else "false"
        row["strict"] = "true" if self.strict else "false"
        return row

    @classmethod
    def from_csv_row(cls, row: dict) -> "VerificationRecord":
        return cls(row["ineq"], row["spec"], int(row["n"]), row["r"] or None, row["lhs"],
                   row["rhs"], row["pass"] == "true", row["gap"], row["strict"] == "true")


def dumps_jsonl(rows: Iterable[dict]) -> str:
    return "".join(json.dumps(r, separators=(",", ":")) + "\n" for r in rows)


def dumps_csv(rows: Sequence[dict], fields: Sequence[str]) -> str:
    buf = io.StringIO()
    writer = csv.DictWriter(buf, fieldnames=list(fields), lineterminator="\n")
    writer.writeheader()
    writer.writerows(rows)
    return buf.getvalue()


def loads_csv(text: str) -> list[dict]:
    return list(csv.DictReader(io.StringIO(text)))


def dumps_table(rows: Sequence[dict], fields: Sequence[str]) -> str:
    def cell(v):
        if v is None:
            return "-"
        if isinstance(v, bool):
            return "yes" if v else "NO"
        return str(v)

    cells = [[cell(r.get(f)) for f in fields] for r in rows]
    widths = [max([len(f)] + [len(c[i]) for c in cells]) for i, f in enumerate(fields)]
    lines = ["  ".join(f.ljust(w) for f, w in zip(fields, widths)).rstrip()]
    lines.append("  ".join("-" * w for w in widths))
    lines += ["  ".join(c.ljust(w) for c, w in zip(row, widths)).rstrip() for row in cells]
    return "\n".join(lines) + "\n"


def render(rows: Sequence[dict], fields: Sequence[str], fmt: str) -> str:
    if fmt == "jsonl":
        return dumps_jsonl(rows)
    if fmt == "csv":
        return dumps_csv([{k: _csv_cell(r.get(k)) for k in fields} for r in rows], fields)
    return dumps_table(rows, fields)


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    return v


@dataclass(frozen=True)
class SuiteSummary:
    ineq: str
    checks: int
    violations: int
    worst_gap: str

    def to_json_dict(self) -> dict:
        return {"summary": self.ineq, "checks": self.checks,
                "violations": self.violations, "worst_gap": self.worst_gap}


def summarize(records: Sequence[VerificationRecord], ids: Sequence[str]) -> list[SuiteSummary]:
    """One line per id; inequalities report the smallest gap, identities the largest |gap|."""
    out = []
    for ineq in ids:
        mine = [r for r in records if r.ineq == ineq]
        violations = sum(not r.passed for r in mine)
        if not mine:
            worst = "-"
        elif ineq in IDENTITY_IDS:
            worst = max(mine, key=lambda r: abs(r.gap_value)).gap.lstrip("-")
        else:
            worst = min(mine, key=lambda r: r.gap_value).gap
        out.append(SuiteSummary(ineq, len(mine), violations, worst))
    return out

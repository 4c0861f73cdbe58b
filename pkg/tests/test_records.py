import json
from fractions import Fraction

from riemann_bounds.records import (
    CSV_FIELDS, INEQUALITY_IDS, VerificationRecord, dumps_csv, dumps_jsonl, loads_csv, summarize,
)
from riemann_bounds.verify import run_suite


def _sample(exact, flt):
    return [
        VerificationRecord.build("Eq3L", "pow:r=2@[0,1]", 2, None, Fraction(7, 12), Fraction(5, 8), True, True, exact),
        VerificationRecord.build("Eq10R", "pow:r=1.5@[0,1]", 3, "1.5", flt.scalar(Fraction(1, 3)),
                                 flt.scalar(Fraction(1, 2)), True, True, flt),
        VerificationRecord.build("Eq5", "neg:exp@[0,1]", 1, None, flt.scalar(-1), flt.scalar(-2), False, False, flt),
    ]


def test_json_schema_keys(exact, flt):
    for rec in _sample(exact, flt):
        d = json.loads(dumps_jsonl([rec.to_json_dict()]))
        assert list(d) == list(CSV_FIELDS)
        assert isinstance(d["n"], int) and isinstance(d["pass"], bool) and isinstance(d["strict"], bool)
        assert d["r"] is None or isinstance(d["r"], str)


def test_gap_is_rhs_minus_lhs(exact):
    rec = _sample(exact, exact.float_companion())[0]
    assert rec.gap == "1/24" and rec.lhs == "7/12" and rec.rhs == "5/8"


def test_jsonl_and_csv_round_trip(exact, flt):
    recs = _sample(exact, flt)
    from_json = [VerificationRecord.from_json_dict(json.loads(line))
                 for line in dumps_jsonl([r.to_json_dict() for r in recs]).splitlines()]
    from_csv = [VerificationRecord.from_csv_row(row)
                for row in loads_csv(dumps_csv([r.to_csv_row() for r in recs], CSV_FIELDS))]
    assert from_json == recs
    assert from_csv == recs


def test_summary_lists_every_inequality_id(exact):
    recs = run_suite("corollary23", exact, n_values=range(1, 6))
    summary = summarize(recs, INEQUALITY_IDS)
    assert [s.ineq for s in summary] == list(INEQUALITY_IDS)
    assert len(summary) == 12
    counts = {s.ineq: s.checks for s in summary}
    assert counts["Eq1"] == counts["Eq10L"] == counts["Eq10R"] == 5 * 4
    assert counts["Eq3L"] == 0


def test_summary_reports_smallest_gap(exact):
    recs = _sample(exact, exact.float_companion())
    (s,) = summarize(recs, ["Eq5"])
    assert s.violations == 1 and s.worst_gap == "-1"

"""Structured pass/fail records for verification checks."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class VerificationReport:
    """Outcome of one check, with per-grade detail.

    `grades` maps each kappa-grade up to the truncation to a boolean;
    `failure` holds the lowest-grade differing monomial when a comparison
    failed; `notes` carries informational findings (e.g. which printed sign
    a computed antipode matches).
    """

    check: str
    params: dict
    passed: bool
    grades: dict = field(default_factory=dict)
    failure: dict | None = None
    notes: list = field(default_factory=list)

    def to_dict(self):
        return {
            "check": self.check,
            "params": {k: str(v) for k, v in sorted(self.params.items())},
            "status": "pass" if self.passed else "fail",
            "grades": {str(n): ("pass" if ok else "fail")
                       for n, ok in sorted(self.grades.items())},
            "first_failure": self.failure,
            "notes": list(self.notes),
        }


def merge_reports(check, params, reports, notes=None):
    """Combine sub-comparisons of one logical check into a single report."""
    grades = {}
    failure = None
    all_notes = list(notes or [])
    for rep in reports:
        for n, ok in rep.grades.items():
            grades[n] = grades.get(n, True) and ok
        if failure is None:
            failure = rep.failure
        all_notes.extend(rep.notes)
    passed = all(r.passed for r in reports)
    return VerificationReport(check, params, passed, grades, failure, all_notes)

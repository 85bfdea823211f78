"""Verification records.

A check is either theorem-backed (a failure means a bug: status
``violation``) or conjecture-backed (a failure is evidence worth recording:
status ``finding``).
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field

STATUSES = ("pass", "finding", "violation")


@dataclass
class ReportRecord:
    check: str
    N: int | None = None
    r: int | None = None
    j: int | None = None
    status: str = "pass"
    expected: object = None
    observed: object = None
    theorem: bool = True
    detail: object = None
    seed: int | None = None
    elapsed: float | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError("unknown status %r" % self.status)
        if self.status == "violation" and not self.theorem:
            raise ValueError("conjecture-backed checks cannot report a violation")
        if self.status == "finding" and self.theorem:
            raise ValueError("theorem-backed checks cannot report a finding")

    @property
    def ok(self) -> bool:
        return self.status == "pass"

    def to_dict(self, timings: bool = False) -> dict:
        out = {
            "check": self.check,
            "N": self.N,
            "r": self.r,
            "j": self.j,
            "expected": self.expected,
            "observed": self.observed,
            "status": self.status,
            "kind": "theorem" if self.theorem else "conjecture",
        }
        if self.detail is not None:
            out["detail"] = self.detail
        if self.seed is not None:
            out["seed"] = self.seed
        if timings and self.elapsed is not None:
            out["elapsed"] = round(self.elapsed, 6)
        return out


def theorem_record(check, ok, **kw) -> ReportRecord:
    return ReportRecord(check, status="pass" if ok else "violation", theorem=True, **kw)


def conjecture_record(check, ok, **kw) -> ReportRecord:
    return ReportRecord(check, status="pass" if ok else "finding", theorem=False, **kw)


def dump_records(records, timings: bool = False) -> str:
    return json.dumps([rec.to_dict(timings) for rec in records], indent=1, sort_keys=True) + "\n"


def summarize(records) -> dict:
    counts = {s: 0 for s in STATUSES}
    for rec in records:
        counts[rec.status] += 1
    return counts

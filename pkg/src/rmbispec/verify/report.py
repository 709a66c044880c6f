"""Check reports and their JSON/CSV forms."""

from __future__ import annotations

import csv
import io
import json
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional

import mpmath

EXACT_PASS = "exact-pass"
NUMERIC_PASS = "numeric-pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"
STATUSES = (EXACT_PASS, NUMERIC_PASS, FAIL, INCONCLUSIVE)


def _num(x) -> float:
    return float(mpmath.mpf(x)) if not isinstance(x, float) else x


@dataclass
class SubCheck:
    name: str
    status: str
    residual: Any = "0"
    witnesses: List[str] = field(default_factory=list)
    diagnostics: Dict[str, Any] = field(default_factory=dict)

    def to_json(self) -> dict:
        d = {"name": self.name, "status": self.status, "residual": self.residual}
        if self.witnesses:
            d["witnesses"] = list(self.witnesses)
        if self.diagnostics:
            d["diagnostics"] = self.diagnostics
        return d


@dataclass
class CheckReport:
    suite: str
    params: Dict[str, Any]
    status: str
    residual: Any
    witnesses: List[str]
    elapsed_ms: int = 0
    checks: List[SubCheck] = field(default_factory=list)

    @classmethod
    def combine(cls, suite: str, params: dict, checks: List[SubCheck],
                elapsed_ms: int = 0) -> "CheckReport":
        statuses = [c.status for c in checks]
        if FAIL in statuses:
            status = FAIL
        elif INCONCLUSIVE in statuses:
            status = INCONCLUSIVE
        elif NUMERIC_PASS in statuses:
            status = NUMERIC_PASS
        else:
            status = EXACT_PASS
        worst = 0.0
        for c in checks:
            if c.residual != "0":
                worst = max(worst, float(c.residual))
        residual: Any = "0" if worst == 0.0 else worst
        wit = [f"{c.name}: {w}" for c in checks if c.status == FAIL for w in c.witnesses]
        wit += [f"{c.name}: inconclusive" for c in checks if c.status == INCONCLUSIVE]
        return cls(suite, params, status, residual, wit, elapsed_ms, checks)

    @property
    def passed(self) -> bool:
        return self.status in (EXACT_PASS, NUMERIC_PASS)

    def to_json(self) -> dict:
        return {
            "suite": self.suite,
            "params": self.params,
            "status": self.status,
            "residual": self.residual,
            "witnesses": self.witnesses,
            "elapsed_ms": self.elapsed_ms,
            "checks": [c.to_json() for c in self.checks],
        }


def reports_to_json(reports: List[CheckReport]) -> str:
    return json.dumps([r.to_json() for r in reports], indent=2, sort_keys=False) + "\n"


CSV_FIELDS = ["suite", "status", "residual", "elapsed_ms", "witnesses", "params"]


def reports_to_csv(reports: List[CheckReport]) -> str:
    buf = io.StringIO()
    w = csv.DictWriter(buf, fieldnames=CSV_FIELDS, lineterminator="\n")
    w.writeheader()
    for r in reports:
        w.writerow({
            "suite": r.suite,
            "status": r.status,
            "residual": r.residual,
            "elapsed_ms": r.elapsed_ms,
            "witnesses": "; ".join(r.witnesses),
            "params": json.dumps(r.params, sort_keys=True),
        })
    return buf.getvalue()

from __future__ import annotations
from typing import Dict, List, Literal, Optional

from pydantic import BaseModel

REPORT_VERSION = 1

Status = Literal["pass", "fail", "unknown"]


class CheckReport(BaseModel):
    check: str                  # verifier name, e.g. "lemma3.1"
    status: Status
    details: List[str] = []
    witnesses: List[str] = []   # modules or K0 elements that decided the status

    @property
    def passed(self) -> bool:
        return self.status == "pass"


class HypothesisReport(BaseModel):
    h1: bool
    h2: bool
    h3: bool
    h4: Literal["holds", "unknown"]
    witnesses: Dict[str, List[str]] = {}   # hypothesis -> offending arrows/paths/classes

    def as_check(self) -> CheckReport:
        flags = {"H1": self.h1, "H2": self.h2, "H3": self.h3}
        details = [f"{k}: {'holds' if v else 'fails'}" for k, v in flags.items()]
        details.append(f"H4: {self.h4}")
        witnesses = [f"{k}: {w}" for k, ws in self.witnesses.items() for w in ws]
        if not all(flags.values()):
            status = "fail"
        elif self.h4 == "unknown":
            status = "unknown"
        else:
            status = "pass"
        return CheckReport(check="hypotheses", status=status, details=details, witnesses=witnesses)


class ResultRow(BaseModel):
    item: str                   # module, vertex or suite the value belongs to
    value: str
    note: Optional[str] = None  # e.g. "lower bound, horizon 10"


class ReportDocument(BaseModel):
    version: int = REPORT_VERSION
    command: str
    algebra: Optional[str] = None
    results: List[ResultRow] = []
    reports: List[CheckReport] = []

    def exit_status(self) -> int:
        status = exit_status(self.reports)
        if status == 0 and any(r.value.startswith("unknown") for r in self.results):
            return 3
        return status


def combine(check: str, parts: List[CheckReport]) -> CheckReport:
    """Fold sub-reports: any fail fails, else any unknown is unknown."""
    statuses = {p.status for p in parts}
    status: Status = "fail" if "fail" in statuses else "unknown" if "unknown" in statuses else "pass"
    details = [f"{p.check}: {p.status}" for p in parts] + [d for p in parts for d in p.details]
    witnesses = [w for p in parts for w in p.witnesses]
    return CheckReport(check=check, status=status, details=details, witnesses=witnesses)


def exit_status(reports: List[CheckReport]) -> int:
    """0 when every report passes, 1 on any failure, 3 when only unknowns remain."""
    statuses = {r.status for r in reports}
    if "fail" in statuses:
        return 1
    if "unknown" in statuses:
        return 3
    return 0

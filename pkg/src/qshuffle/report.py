"""Pass/fail records for identity checks, and their aggregation."""
from __future__ import annotations

import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Any, Iterable

PASS = "pass"
FAIL = "fail"
INCONCLUSIVE = "inconclusive"


@dataclass
class VerificationReport:
    """Outcome of one identity at one parameter tuple.

    ``residual`` is the difference of the two sides as an element of V
    (scalar identities put their difference on the trivial word).  A report
    passes exactly when the residual is zero.
    """

    identity: str
    params: dict[str, Any] = field(default_factory=dict)
    status: str = PASS
    residual: Any = None
    elapsed: float = 0.0
    detail: str = ""

    @classmethod
    def from_residual(cls, identity, params, residual, elapsed=0.0, detail=""):
        status = PASS if not residual else FAIL
        return cls(identity, dict(params), status, None if status == PASS else residual,
                   elapsed, detail)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def sort_key(self):
        return self.identity, json.dumps(self.params, sort_keys=True)

    def to_dict(self) -> dict:
        from . import freealg

        residual = None
        if self.residual is not None:
            residual = freealg.to_json(self.residual)
        return {
            "identity": self.identity,
            "params": self.params,
            "status": self.status,
            "residual": residual,
            "elapsed": round(self.elapsed, 6),
            "detail": self.detail,
        }


@dataclass
class SuiteReport:
    """A deterministic, sorted collection of :class:`VerificationReport`."""

    reports: list[VerificationReport] = field(default_factory=list)

    def extend(self, reports: Iterable[VerificationReport]) -> None:
        self.reports.extend(reports)

    def sorted(self) -> list[VerificationReport]:
        return sorted(self.reports, key=VerificationReport.sort_key)

    @property
    def vacuous(self) -> bool:
        return not self.reports

    @property
    def failures(self) -> list[VerificationReport]:
        return [r for r in self.sorted() if r.status == FAIL]

    @property
    def inconclusive(self) -> list[VerificationReport]:
        return [r for r in self.sorted() if r.status == INCONCLUSIVE]

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.reports)

    def exit_code(self) -> int:
        if self.failures:
            return 1
        if self.inconclusive:
            return 2
        return 0

    def counts(self) -> dict[str, Counter]:
        by_name: dict[str, Counter] = {}
        for r in self.reports:
            by_name.setdefault(r.identity, Counter())[r.status] += 1
        return by_name

    def summary_lines(self) -> list[str]:
        lines = []
        for name, c in sorted(self.counts().items()):
            total = sum(c.values())
            verdict = "FAIL" if c[FAIL] else ("INCONCLUSIVE" if c[INCONCLUSIVE] else "PASS")
            lines.append(f"{verdict:<12} {name}: {c[PASS]}/{total} instances pass")
        if self.vacuous:
            lines.append("VACUOUS      no checks were run")
        return lines

    def to_jsonl(self) -> str:
        return "".join(json.dumps(r.to_dict(), sort_keys=True) + "\n" for r in self.sorted())

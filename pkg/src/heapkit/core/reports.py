"""
Verification reports.

Provides:
- Check: one evaluated relation instance
- VerificationReport: aggregated pass/fail record for a suite, JSON export via orjson
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import orjson


def _jsonable(value: Any) -> Any:
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple, set, frozenset)):
        return [_jsonable(v) for v in value]
    if hasattr(value, "to_json_value"):
        return value.to_json_value()
    return value


@dataclass
class Check:
    """A single relation instance and its outcome."""

    relation: str
    passed: bool
    witness: Any = None
    detail: str = ""

    def to_dict(self) -> dict[str, Any]:
        data: dict[str, Any] = {
            "relation": self.relation,
            "status": "pass" if self.passed else "fail",
        }
        if self.witness is not None:
            data["witness"] = _jsonable(self.witness)
        if self.detail:
            data["detail"] = self.detail
        return data


@dataclass
class VerificationReport:
    """Outcome of one verification suite."""

    suite: str
    checks: int = 0
    failures: list[Check] = field(default_factory=list)
    skipped: list[str] = field(default_factory=list)
    metadata: dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return not self.failures

    def record(self, relation: str, ok: bool, witness: Any = None, detail: str = "") -> bool:
        self.checks += 1
        if not ok:
            self.failures.append(Check(relation, False, witness, detail))
        return ok

    def skip(self, relation: str) -> None:
        self.skipped.append(relation)

    def merge(self, other: VerificationReport, suite: str | None = None) -> VerificationReport:
        merged = VerificationReport(
            suite=suite or self.suite,
            checks=self.checks + other.checks,
            failures=[*self.failures, *other.failures],
            skipped=[*self.skipped, *other.skipped],
            metadata={**self.metadata, **other.metadata},
        )
        return merged

    def relations_failed(self) -> set[str]:
        return {f.relation for f in self.failures}

    def to_dict(self) -> dict[str, Any]:
        return {
            "suite": self.suite,
            "passed": self.passed,
            "checks": self.checks,
            "failures": [f.to_dict() for f in self.failures],
            "skipped": list(self.skipped),
            "metadata": _jsonable(self.metadata),
        }

    def to_json(self) -> bytes:
        return orjson.dumps(self.to_dict(), option=orjson.OPT_SORT_KEYS)

    def summary(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        counts = f"{self.checks} checks, {len(self.failures)} failures"
        if self.skipped:
            counts += f", {len(self.skipped)} skipped"
        return f"{self.suite}: {status} ({counts})"

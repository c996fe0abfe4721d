"""Named certification checks with residuals, tolerances, and verdicts."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass(frozen=True)
class CheckResult:
    """One certification check: verdict plus the evidence behind it."""

    name: str
    passed: bool
    residual: float
    tolerance: float
    details: dict[str, Any] = field(default_factory=dict)

    def __bool__(self) -> bool:
        return self.passed

    def to_dict(self) -> dict[str, Any]:
        return {
            "name": self.name,
            "passed": self.passed,
            "residual": self.residual,
            "tolerance": self.tolerance,
            "details": self.details,
        }


@dataclass
class VerificationReport:
    """Ordered collection of check results for one model or channel."""

    label: str = ""
    checks: list[CheckResult] = field(default_factory=list)

    def add(self, check: CheckResult) -> CheckResult:
        self.checks.append(check)
        return check

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def failures(self) -> list[CheckResult]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self) -> dict[str, Any]:
        return {
            "label": self.label,
            "all_passed": self.all_passed,
            "checks": [c.to_dict() for c in self.checks],
        }

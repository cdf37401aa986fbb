"""
Verification report types.
"""
from dataclasses import dataclass, field
from typing import Any, Dict, List, Optional


@dataclass
class CheckResult:
    """Outcome of one named check across every instance it inspected"""
    name: str
    instances: int = 0
    failures: int = 0
    counterexample: Optional[Dict[str, Any]] = None

    @property
    def passed(self) -> bool:
        return self.failures == 0

    def record(self, ok: bool, counterexample: Optional[Dict[str, Any]] = None) -> bool:
        self.instances += 1
        if not ok:
            self.failures += 1
            if self.counterexample is None and counterexample is not None:
                self.counterexample = counterexample
        return ok

    def merge(self, other: "CheckResult") -> None:
        self.instances += other.instances
        self.failures += other.failures
        if self.counterexample is None:
            self.counterexample = other.counterexample


@dataclass
class VerificationReport:
    """Aggregated result of a verification run"""
    scope: int
    checks: List[CheckResult] = field(default_factory=list)
    elapsed: float = 0.0
    notes: Dict[str, Any] = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(check.passed for check in self.checks)

    @property
    def total_failures(self) -> int:
        return sum(check.failures for check in self.checks)

    def check(self, name: str) -> CheckResult:
        """Return the named check, creating it on first use."""
        for existing in self.checks:
            if existing.name == name:
                return existing
        created = CheckResult(name=name)
        self.checks.append(created)
        return created

    def merge(self, other: "VerificationReport") -> None:
        for incoming in other.checks:
            self.check(incoming.name).merge(incoming)
        for key, value in other.notes.items():
            if isinstance(value, int) and isinstance(self.notes.get(key), int):
                self.notes[key] += value
            else:
                self.notes.setdefault(key, value)

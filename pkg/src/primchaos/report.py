"""Check reports: the shared schema every verification routine emits."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import List


@dataclass
class CheckItem:
    name: str
    passed: bool
    witness: str = ""  # what passed, or the counterexample when it failed


@dataclass
class CheckReport:
    """Ordered list of named pass/fail checks for one instance.

    Summary counts are derived, never stored, so they cannot drift from the
    item list.  Iteration order is insertion order; serialization is
    deterministic.
    """

    instance: str
    checks: List[CheckItem] = field(default_factory=list)

    def add(self, name: str, passed: bool, witness: str = "") -> None:
        self.checks.append(CheckItem(name, bool(passed), witness))

    @property
    def all_passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def n_passed(self) -> int:
        return sum(1 for c in self.checks if c.passed)

    @property
    def n_failed(self) -> int:
        return sum(1 for c in self.checks if not c.passed)

    def to_document(self) -> dict:
        return {
            "instance": self.instance,
            "checks": [
                {"name": c.name, "pass": c.passed, "witness": c.witness}
                for c in self.checks
            ],
            "summary": {
                "passed": self.n_passed,
                "failed": self.n_failed,
                "total": len(self.checks),
            },
        }

    def summary_lines(self) -> List[str]:
        lines = []
        for c in self.checks:
            status = "pass" if c.passed else "FAIL"
            suffix = f"  [{c.witness}]" if c.witness else ""
            lines.append(f"  {status}  {c.name}{suffix}")
        lines.append(f"  {self.n_passed}/{len(self.checks)} checks passed")
        return lines

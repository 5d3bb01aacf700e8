"""Pass/fail reports shared by the verifiers."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Optional


@dataclass
class Report:
    name: str
    passed: bool = True
    checks: int = 0
    counterexample: Optional[dict] = None
    details: dict = field(default_factory=dict)

    def fail(self, **info) -> None:
        # keep the first counterexample only
        if self.passed:
            self.passed = False
            self.counterexample = info

    def check(self, ok: bool, **info) -> bool:
        self.checks += 1
        if not ok:
            self.fail(**info)
        return ok

    def to_json(self) -> dict:
        out = {"name": self.name, "pass": self.passed, "checks": self.checks}
        if self.counterexample is not None:
            out["counterexample"] = self.counterexample
        if self.details:
            out["details"] = self.details
        return out

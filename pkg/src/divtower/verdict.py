"""Outcome records shared by the verification routines."""

from __future__ import annotations

import time
from dataclasses import dataclass, field
from typing import Any


@dataclass
class TheoremVerdict:
    claim: str
    statement: str
    mode: str = "specialized"
    alphas: tuple | None = None
    passed: bool = False
    degrees: dict[str, Any] = field(default_factory=dict)
    checks: list[dict[str, Any]] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)
    runtime: float = 0.0

    def check(self, name: str, ok: bool, expected: bool = True, **details) -> bool:
        """Record one exact check.  ``expected=False`` marks a demonstration
        that is supposed to fail; it counts as satisfied when it does fail."""
        entry = {"check": name, "holds": bool(ok), "expected": expected}
        entry.update(details)
        self.checks.append(entry)
        return bool(ok) == expected

    def finish(self, started: float | None = None) -> "TheoremVerdict":
        self.passed = all(c["holds"] == c["expected"] for c in self.checks)
        if started is not None:
            self.runtime = time.perf_counter() - started
        return self

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def to_dict(self) -> dict[str, Any]:
        return {
            "claim": self.claim,
            "statement": self.statement,
            "mode": self.mode,
            "alphas": None if self.alphas is None else [str(a) for a in self.alphas],
            "status": self.status,
            "degrees": self.degrees,
            "checks": self.checks,
            "notes": self.notes,
            "runtime_s": round(self.runtime, 4),
        }

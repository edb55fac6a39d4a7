"""Verification reports shared by the kernel's self-checks and the suites."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Any


@dataclass
class Violation:
    description: str
    inputs: Any
    lhs: str
    rhs: str

    def to_json(self) -> dict:
        return {"description": self.description, "inputs": self.inputs,
                "lhs": self.lhs, "rhs": self.rhs}


@dataclass
class Report:
    suite: str
    m: int
    n: int
    seed: int | None = None
    params: dict = field(default_factory=dict)
    checks: int = 0
    violations: list[Violation] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.violations

    def check(self, ok: bool, description: str, inputs=None, lhs="", rhs="") -> bool:
        self.checks += 1
        if not ok:
            self.violations.append(Violation(description, inputs, str(lhs), str(rhs)))
        return ok

    def merge(self, other: "Report"):
        self.checks += other.checks
        self.violations.extend(other.violations)

    def to_json(self) -> dict:
        out = {"suite": self.suite, "m": self.m, "n": self.n, "seed": self.seed}
        if self.params:
            out["params"] = self.params
        out["checks"] = self.checks
        out["passed"] = self.passed
        out["violations"] = [v.to_json() for v in self.violations]
        return out

    def dumps(self) -> str:
        return json.dumps(self.to_json(), indent=2, sort_keys=False)

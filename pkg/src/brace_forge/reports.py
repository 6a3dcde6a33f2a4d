"""Check results shared by every verification routine."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

import numpy as np

from .errors import PropertyViolation


def jsonable(value: Any) -> Any:
    if isinstance(value, np.ndarray):
        return value.tolist()
    if isinstance(value, (np.integer,)):
        return int(value)
    if isinstance(value, (np.bool_,)):
        return bool(value)
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    return value


@dataclass
class Check:
    check: str
    holds: bool
    witness: Any = None
    # informational checks are reported but never fail a run
    informational: bool = False

    def to_json(self) -> dict:
        out = {"check": self.check, "holds": bool(self.holds), "witness": jsonable(self.witness)}
        if self.informational:
            out["informational"] = True
        return out


@dataclass
class Report:
    name: str
    checks: list[Check] = field(default_factory=list)
    data: dict = field(default_factory=dict)

    def add(self, check: str, holds: bool, witness: Any = None, *, informational: bool = False) -> Check:
        c = Check(check, bool(holds), witness, informational)
        self.checks.append(c)
        return c

    def extend(self, other: "Report") -> None:
        self.checks.extend(other.checks)

    @property
    def holds(self) -> bool:
        return all(c.holds for c in self.checks if not c.informational)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.holds and not c.informational]

    def require(self) -> "Report":
        bad = self.failures()
        if bad:
            raise PropertyViolation(f"{self.name}: {bad[0].check}", bad[0].witness)
        return self

    def to_json(self) -> dict:
        out = {"name": self.name, "holds": self.holds, "checks": [c.to_json() for c in self.checks]}
        if self.data:
            out["data"] = jsonable(self.data)
        return out

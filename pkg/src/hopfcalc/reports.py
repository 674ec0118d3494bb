"""Small result containers shared by every verification routine."""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import List, Optional


@dataclass
class Check:
    """Outcome of a single named check.

    ``passed`` is True/False, or None when the check does not apply
    (e.g. a DG-module structure over a non-cocommutative algebra).
    ``witness`` identifies the offending basis tuple and defect on failure.
    """

    name: str
    passed: Optional[bool]
    witness: object = None

    @property
    def status(self) -> str:
        if self.passed is None:
            return "inapplicable"
        return "pass" if self.passed else "fail"


@dataclass
class Report:
    checks: List[Check] = field(default_factory=list)

    def add(self, name: str, passed: Optional[bool], witness=None) -> Check:
        c = Check(name, passed, witness if (passed is False) else None)
        self.checks.append(c)
        return c

    @property
    def passed(self) -> bool:
        return all(c.passed is not False for c in self.checks)

    def failures(self) -> List[Check]:
        return [c for c in self.checks if c.passed is False]

    def to_json(self) -> list:
        out = []
        for c in self.checks:
            entry = {"name": c.name, "status": c.status}
            if c.witness is not None:
                entry["witness"] = _jsonable(c.witness)
            out.append(entry)
        return out

    def __str__(self):
        return "\n".join(f"{c.name}: {c.status}" for c in self.checks)


def _jsonable(obj):
    if isinstance(obj, dict):
        return {str(k): _jsonable(v) for k, v in obj.items()}
    if isinstance(obj, (list, tuple)):
        return [_jsonable(x) for x in obj]
    if isinstance(obj, (int, str, bool)) or obj is None:
        return obj
    return str(obj)

"""Itemized verification reports."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any


@dataclass
class Check:
    name: str
    passed: bool
    witness: Any = None


@dataclass
class Report:
    """Ordered list of named checks; ``ok`` iff every check passed."""

    checks: list[Check] = field(default_factory=list)

    def add(self, name: str, failures: list | bool, witness=None) -> Check:
        # failures: a list of witnesses (empty = pass) or a plain verdict
        if isinstance(failures, bool):
            chk = Check(name, failures, witness)
        else:
            chk = Check(name, not failures, failures or None)
        self.checks.append(chk)
        return chk

    def extend(self, other: Report, prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.name, c.passed, c.witness))

    @property
    def ok(self) -> bool:
        return all(c.passed for c in self.checks)

    def __bool__(self):
        return self.ok

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def __getitem__(self, name: str) -> Check:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def names(self) -> list[str]:
        return [c.name for c in self.checks]

    def to_json(self) -> dict:
        return {
            "ok": self.ok,
            "checks": [
                {"name": c.name, "passed": c.passed, "witness": _jsonable(c.witness)}
                for c in self.checks
            ],
        }

    def summary(self) -> str:
        lines = [f"{'PASS' if c.passed else 'FAIL'}  {c.name}" for c in self.checks]
        return "\n".join(lines)


def _jsonable(x):
    from .exact import CycScalar

    if x is None or isinstance(x, (bool, int, str)):
        return x
    if isinstance(x, CycScalar):
        return x.to_json()
    if isinstance(x, dict):
        return [[_jsonable(k), _jsonable(v)] for k, v in sorted(x.items(), key=lambda kv: repr(kv[0]))]
    if isinstance(x, (list, tuple)):
        return [_jsonable(v) for v in x]
    return str(x)

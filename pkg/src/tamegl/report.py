"""Check reports shared by every verification suite.

A report is an ordered list of checks; its JSON form is
``{"suite": ..., "checks": [{"id", "status", "expected", "got", "details",
"paper_anchor"}]}`` with keys always in that order.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Any, Dict, List

STATUSES = ("pass", "fail", "skip")


def _jsonable(value: Any) -> Any:
    if value is None or isinstance(value, (bool, int, str)):
        return value
    if isinstance(value, Fraction):
        return str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(v) for v in value]
    if isinstance(value, (set, frozenset)):
        # hash order differs between processes
        return sorted((_jsonable(v) for v in value), key=str)
    if isinstance(value, dict):
        return {str(k): _jsonable(v) for k, v in value.items()}
    return str(value)


@dataclass(frozen=True)
class Check:
    id: str
    status: str
    expected: Any = None
    got: Any = None
    details: str = ""
    anchor: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"bad status {self.status!r}")

    @property
    def ok(self) -> bool:
        return self.status != "fail"

    def to_dict(self) -> Dict[str, Any]:
        return {
            "id": self.id,
            "status": self.status,
            "expected": _jsonable(self.expected),
            "got": _jsonable(self.got),
            "details": self.details,
            "paper_anchor": self.anchor,
        }


@dataclass
class CheckReport:
    suite: str
    checks: List[Check] = field(default_factory=list)

    def add(self, id: str, ok: bool, expected: Any = None, got: Any = None,
            details: str = "", anchor: str = "") -> Check:
        check = Check(id, "pass" if ok else "fail", expected, got, details, anchor)
        self.checks.append(check)
        return check

    def skip(self, id: str, details: str = "", anchor: str = "") -> Check:
        check = Check(id, "skip", details=details, anchor=anchor)
        self.checks.append(check)
        return check

    def extend(self, other: "CheckReport", prefix: str = "") -> None:
        for c in other.checks:
            self.checks.append(Check(prefix + c.id, c.status, c.expected, c.got,
                                     c.details, c.anchor))

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def status(self) -> str:
        return "pass" if self.passed else "fail"

    def failures(self) -> List[Check]:
        return [c for c in self.checks if not c.ok]

    def __getitem__(self, check_id: str) -> Check:
        for c in self.checks:
            if c.id == check_id:
                return c
        raise KeyError(check_id)

    def to_dict(self) -> Dict[str, Any]:
        return {"suite": self.suite, "checks": [c.to_dict() for c in self.checks]}

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    def to_text(self) -> str:
        lines = [f"[{self.suite}] {self.status.upper()} ({len(self.checks)} checks)"]
        for c in self.checks:
            line = f"  {c.status.upper():4}  {c.id}"
            if c.status == "fail":
                line += f"  expected={_jsonable(c.expected)!r} got={_jsonable(c.got)!r}"
            if c.details and c.status != "pass":
                line += f"  ({c.details})"
            lines.append(line)
        return "\n".join(lines) + "\n"

"""Structured pass/fail reports shared by the verifiers and the CLI."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Literal

Status = Literal["pass", "fail", "flagged"]
STATUSES = ("pass", "fail", "flagged")


@dataclass(frozen=True)
class Check:
    id: str
    description: str
    status: Status
    detail: str = ""

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"unknown status {self.status!r}")


@dataclass
class Report:
    suite: str
    checks: list[Check] = field(default_factory=list)
    paper_anchors: list[str] = field(default_factory=list)

    def add(self, id: str, description: str, ok: bool, detail: str = "") -> Check:
        return self.record(Check(id, description, "pass" if ok else "fail", detail))

    def flag(self, id: str, description: str, detail: str) -> Check:
        """Record a confirmed mismatch with a printed formula (never fails a run)."""
        return self.record(Check(id, description, "flagged", detail))

    def record(self, check: Check) -> Check:
        if any(c.id == check.id for c in self.checks):
            raise ValueError(f"duplicate check id {check.id!r} in suite {self.suite!r}")
        self.checks.append(check)
        return check

    def anchor(self, *anchors: str) -> None:
        for a in anchors:
            if a not in self.paper_anchors:
                self.paper_anchors.append(a)

    def extend(self, other: "Report", prefix: str | None = None) -> None:
        for c in other.checks:
            cid = f"{prefix}.{c.id}" if prefix else c.id
            self.record(Check(cid, c.description, c.status, c.detail))
        self.anchor(*other.paper_anchors)

    def __getitem__(self, id: str) -> Check:
        for c in self.checks:
            if c.id == id:
                return c
        raise KeyError(id)

    @property
    def passed(self) -> bool:
        """True when no check failed; flagged checks do not count as failures."""
        return all(c.status != "fail" for c in self.checks)

    def count(self, status: Status) -> int:
        return sum(c.status == status for c in self.checks)

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [
                {"id": c.id, "description": c.description, "status": c.status, "detail": c.detail}
                for c in self.checks
            ],
            "paper_anchors": list(self.paper_anchors),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: dict) -> "Report":
        return cls(
            suite=data["suite"],
            checks=[Check(c["id"], c["description"], c["status"], c.get("detail", "")) for c in data["checks"]],
            paper_anchors=list(data.get("paper_anchors", [])),
        )

    @classmethod
    def from_json(cls, text: str) -> "Report":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        marks = {"pass": "PASS", "fail": "FAIL", "flagged": "FLAG"}
        width = max((len(c.id) for c in self.checks), default=0)
        lines = [f"== {self.suite} =="]
        for c in self.checks:
            line = f"[{marks[c.status]}] {c.id.ljust(width)}  {c.description}"
            if c.detail:
                line += f"\n       {' ' * width}  {c.detail}"
            lines.append(line)
        lines.append(
            f"-- {self.count('pass')} passed, {self.count('fail')} failed, "
            f"{self.count('flagged')} flagged"
        )
        return "\n".join(lines)

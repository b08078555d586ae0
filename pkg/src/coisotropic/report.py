"""Verification reports: check records, JSON round trip, markdown rendering."""

from __future__ import annotations

import json
from dataclasses import dataclass, field

STATUSES = ("pass", "fail", "skip")


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    witness: str | None = None

    def __post_init__(self):
        if self.status not in STATUSES:
            raise ValueError(f"status must be one of {STATUSES}")


@dataclass
class VerificationReport:
    suite: str
    seed: int = 0
    checks: list[Check] = field(default_factory=list)
    runtime_ms: int = 0

    def add(self, name: str, ok: bool | None, witness: str | None = None) -> Check:
        """Record a check; ``ok=None`` records a skip."""
        status = "skip" if ok is None else ("pass" if ok else "fail")
        check = Check(name, status, witness)
        self.checks.append(check)
        return check

    def extend(self, other: "VerificationReport", prefix: str | None = None) -> None:
        prefix = other.suite if prefix is None else prefix
        for c in other.checks:
            self.checks.append(Check(f"{prefix}/{c.name}" if prefix else c.name, c.status, c.witness))

    @property
    def totals(self) -> dict[str, int]:
        return {s: sum(c.status == s for c in self.checks) for s in STATUSES}

    @property
    def status(self) -> str:
        return "fail" if any(c.status == "fail" for c in self.checks) else "pass"

    @property
    def exit_code(self) -> int:
        return 1 if self.status == "fail" else 0

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "seed": self.seed,
            "status": self.status,
            "totals": self.totals,
            "checks": [{"name": c.name, "status": c.status, "witness": c.witness} for c in self.checks],
            "runtime_ms": self.runtime_ms,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, ensure_ascii=False) + "\n"

    @classmethod
    def from_dict(cls, data: dict) -> "VerificationReport":
        checks = [Check(c["name"], c["status"], c.get("witness")) for c in data.get("checks", [])]
        return cls(data["suite"], int(data.get("seed", 0)), checks, int(data.get("runtime_ms", 0)))

    @classmethod
    def from_json(cls, text: str) -> "VerificationReport":
        return cls.from_dict(json.loads(text))

    def to_markdown(self) -> str:
        t = self.totals
        lines = [
            f"# Verification report: {self.suite}",
            "",
            f"- status: **{self.status}**",
            f"- seed: {self.seed}",
            f"- checks: {t['pass']} pass, {t['fail']} fail, {t['skip']} skip",
            f"- runtime_ms: {self.runtime_ms}",
            "",
            "| check | status | witness |",
            "|---|---|---|",
        ]
        for c in self.checks:
            w = (c.witness or "").replace("|", "\\|").replace("\n", " ")
            lines.append(f"| {c.name} | {c.status} | {w} |")
        return "\n".join(lines) + "\n"

"""Structured pass/fail reports shared by every verification routine."""
from __future__ import annotations

import json
import time
from contextlib import contextmanager
from dataclasses import dataclass, field

PASS, FAIL, SKIP = "pass", "fail", "skip"


@dataclass(frozen=True)
class Check:
    name: str
    status: str
    detail: str = ""

    def __post_init__(self):
        if self.status not in (PASS, FAIL, SKIP):
            raise ValueError(f"bad status {self.status!r}")


@dataclass
class CheckReport:
    suite: str
    checks: list[Check] = field(default_factory=list)
    elapsed_ms: int = 0

    def add(self, name: str, ok: bool | None, detail: str = "") -> bool:
        """Record a check; ``ok=None`` records a skip."""
        status = SKIP if ok is None else (PASS if ok else FAIL)
        self.checks.append(Check(name, status, detail))
        return bool(ok)

    def extend(self, other: "CheckReport", prefix: str | None = None) -> None:
        p = f"{prefix}/" if prefix else ""
        self.checks.extend(Check(p + c.name, c.status, c.detail) for c in other.checks)

    @property
    def passed(self) -> bool:
        return all(c.status != FAIL for c in self.checks)

    def failures(self) -> list[Check]:
        return [c for c in self.checks if c.status == FAIL]

    def counts(self) -> dict[str, int]:
        out = {PASS: 0, FAIL: 0, SKIP: 0}
        for c in self.checks:
            out[c.status] += 1
        return out

    @contextmanager
    def timed(self):
        t0 = time.perf_counter()
        try:
            yield self
        finally:
            self.elapsed_ms = int(round((time.perf_counter() - t0) * 1000))

    # serialization ----------------------------------------------------

    def to_dict(self) -> dict:
        return {
            "suite": self.suite,
            "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in self.checks],
            "elapsed_ms": int(self.elapsed_ms),
        }

    def to_json(self, indent: int | None = 2) -> str:
        return json.dumps(self.to_dict(), indent=indent, ensure_ascii=False)

    @classmethod
    def from_dict(cls, d: dict) -> "CheckReport":
        return cls(
            suite=d["suite"],
            checks=[Check(c["name"], c["status"], c.get("detail", "")) for c in d["checks"]],
            elapsed_ms=int(d.get("elapsed_ms", 0)),
        )

    @classmethod
    def from_json(cls, text: str) -> "CheckReport":
        return cls.from_dict(json.loads(text))

    def to_text(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'} "
                 f"({self.counts()[PASS]} pass, {self.counts()[FAIL]} fail, "
                 f"{self.counts()[SKIP]} skip, {self.elapsed_ms} ms)"]
        for c in self.checks:
            tail = f"  -- {c.detail}" if c.detail else ""
            lines.append(f"  [{c.status.upper():4}] {c.name}{tail}")
        return "\n".join(lines)

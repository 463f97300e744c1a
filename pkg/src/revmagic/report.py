"""Small pass/fail record used by the verifying operations."""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

from .errors import VerificationError


@dataclass
class Check:
    claim: str
    ok: bool
    detail: str = ""

    def __str__(self) -> str:
        mark = "PASS" if self.ok else "FAIL"
        return f"[{mark}] {self.claim}" + (f" ({self.detail})" if self.detail else "")


@dataclass
class Report:
    subject: str
    checks: list[Check] = field(default_factory=list)
    data: dict[str, Any] = field(default_factory=dict)

    def check(self, claim: str, ok: bool, detail: str = "") -> bool:
        self.checks.append(Check(claim, bool(ok), detail))
        return bool(ok)

    @property
    def ok(self) -> bool:
        return all(c.ok for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.ok]

    def require(self) -> Report:
        if not self.ok:
            lines = "; ".join(str(c) for c in self.failures)
            raise VerificationError(f"{self.subject}: {lines}")
        return self

    def extend(self, other: Report) -> None:
        for c in other.checks:
            self.checks.append(Check(f"{other.subject}: {c.claim}", c.ok, c.detail))

    def __bool__(self) -> bool:
        return self.ok

    def render(self) -> str:
        return "\n".join([self.subject] + [f"  {c}" for c in self.checks])

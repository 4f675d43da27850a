from __future__ import annotations

from dataclasses import dataclass, field

PASS, FAIL, SKIPPED = "pass", "fail", "skipped"


@dataclass
class CheckResult:
    name: str
    status: str
    detail: str = ""
    data: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return self.status == PASS

    def __bool__(self):
        return self.status == PASS

    def as_dict(self) -> dict:
        out = {"name": self.name, "status": self.status, "detail": self.detail}
        if self.data:
            out["data"] = self.data
        return out


def check(name: str, ok: bool, detail: str = "", **data) -> CheckResult:
    return CheckResult(name, PASS if ok else FAIL, detail, data)


def skipped(name: str, reason: str) -> CheckResult:
    return CheckResult(name, SKIPPED, reason)

"""Named pass/fail results for identity and agreement checks."""

from __future__ import annotations

from dataclasses import dataclass

from .series import TruncSeries


@dataclass
class CheckResult:
    name: str
    anchor: str
    status: str
    max_order: int
    first_failure: int | None = None
    detail: str = ""

    @property
    def passed(self) -> bool:
        return self.status == "pass"

    def to_json(self) -> dict:
        return {
            "name": self.name,
            "anchor": self.anchor,
            "status": self.status,
            "data": {"max_order": self.max_order, "first_failure": self.first_failure, "detail": self.detail},
        }


def compare(name: str, anchor: str, lhs: TruncSeries, rhs: TruncSeries, N: int) -> CheckResult:
    """Termwise comparison of two series through order N - 1."""
    have = min(lhs.order, rhs.order)
    if have < N:
        return CheckResult(name, anchor, "fail", N, have, f"only {have} terms available")
    for k in range(N):
        if lhs[k] != rhs[k]:
            return CheckResult(name, anchor, "fail", N, k, f"{lhs[k]} != {rhs[k]}")
    return CheckResult(name, anchor, "pass", N)


def verdict(name: str, anchor: str, ok: bool, N: int = 0, detail: str = "") -> CheckResult:
    return CheckResult(name, anchor, "pass" if ok else "fail", N, None, detail)

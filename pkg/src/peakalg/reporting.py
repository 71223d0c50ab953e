"""Check results for the verification suites.

A check either passes or fails; failures carry a human-readable witness
(the offending pair, label, or identity).  Reports serialize to JSON with
wall times stripped by default so that repeated runs and different worker
counts produce byte-identical output.
"""

from __future__ import annotations

import json
import time
from dataclasses import dataclass, field


class CheckFailure(Exception):
    """Raised by a check body; the message is the witness."""


@dataclass
class CheckResult:
    check_id: str
    status: str  # "pass" or "fail"
    witness: str = ""
    wall_ms: float = 0.0

    @property
    def ok(self) -> bool:
        return self.status == "pass"


def run_check(check_id: str, fn) -> CheckResult:
    t0 = time.perf_counter()
    try:
        fn()
    except (CheckFailure, AssertionError, ArithmeticError, ValueError) as exc:
        ms = 1000.0 * (time.perf_counter() - t0)
        return CheckResult(check_id, "fail", witness=str(exc), wall_ms=ms)
    ms = 1000.0 * (time.perf_counter() - t0)
    return CheckResult(check_id, "pass", wall_ms=ms)


@dataclass
class VerifyReport:
    suite: str
    checks: list = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def first_failure(self):
        return next((c for c in self.checks if not c.ok), None)

    def merged_sorted(self) -> "VerifyReport":
        out = VerifyReport(self.suite, sorted(self.checks, key=lambda c: c.check_id))
        return out

    def to_json(self, *, include_times: bool = False) -> str:
        body = {
            "suite": self.suite,
            "passed": self.passed,
            "checks": [
                {
                    "id": c.check_id,
                    "status": c.status,
                    **({"witness": c.witness} if c.witness else {}),
                    **({"wall_ms": round(c.wall_ms, 3)} if include_times else {}),
                }
                for c in sorted(self.checks, key=lambda c: c.check_id)
            ],
        }
        return json.dumps(body, indent=2)

    def pretty(self) -> str:
        lines = [f"suite {self.suite}: {'PASS' if self.passed else 'FAIL'}"]
        for c in sorted(self.checks, key=lambda c: c.check_id):
            mark = "ok " if c.ok else "FAIL"
            line = f"  [{mark}] {c.check_id} ({c.wall_ms:.0f} ms)"
            if c.witness:
                line += f" -- {c.witness}"
            lines.append(line)
        return "\n".join(lines)

"""Check and report records produced by the verification suites."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field


@dataclass
class Check:
    id: str
    statement: str
    passed: bool
    witness: str = ""

    def line(self) -> str:
        mark = "PASS" if self.passed else "FAIL"
        tail = f"  [{self.witness}]" if self.witness else ""
        return f"{mark}  {self.id}: {self.statement}{tail}"


def check(id: str, statement: str, passed: bool, witness: str = "") -> Check:
    return Check(id, statement, bool(passed), witness)


@dataclass
class Report:
    suite: str
    p: int
    g: int
    checks: list[Check] = field(default_factory=list)
    bounds: dict = field(default_factory=dict)
    timing: dict = field(default_factory=dict)

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self.checks if not c.passed]

    def to_dict(self, with_timing: bool = True) -> dict:
        d = {
            "suite": self.suite,
            "p": self.p,
            "g": self.g,
            "bounds": self.bounds,
            "passed": self.passed,
            "counts": {"total": len(self.checks), "failed": len(self.failures)},
            "checks": [asdict(c) for c in self.checks],
        }
        if with_timing:
            d["timing"] = self.timing
        return d

    def to_json(self, with_timing: bool = True) -> str:
        return json.dumps(self.to_dict(with_timing), indent=2)

    def to_text(self) -> str:
        head = f"suite {self.suite}  p={self.p}  g={self.g}"
        if self.bounds:
            head += "  " + " ".join(f"{k}={v}" for k, v in sorted(self.bounds.items()))
        lines = [head]
        lines += [c.line() for c in self.checks]
        n, f = len(self.checks), len(self.failures)
        lines.append(f"{n - f}/{n} checks passed")
        return "\n".join(lines)

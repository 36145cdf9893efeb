"""Report records shared by the verification sweeps."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class CheckResult:
    """Tally for one verified claim across a sweep."""

    name: str
    checked: int = 0
    passed: int = 0
    first_failure: dict | None = None

    def record(self, ok: bool, graph_n: int, graph_index: int, details: str = "") -> None:
        self.checked += 1
        if ok:
            self.passed += 1
        elif self.first_failure is None:
            self.first_failure = {
                "graph_id": {"n": graph_n, "index": graph_index},
                "details": details,
            }

    @property
    def ok(self) -> bool:
        return self.passed == self.checked

    def to_json_dict(self) -> dict:
        return {
            "name": self.name,
            "checked": self.checked,
            "passed": self.passed,
            "first_failure": self.first_failure,
        }


@dataclass
class SuiteReport:
    """A set of check tallies from one sweep."""

    max_n: int
    checks: list[CheckResult] = field(default_factory=list)

    @property
    def all_passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def to_json_dict(self) -> dict:
        return {
            "max_n": self.max_n,
            "all_passed": self.all_passed,
            "checks": [c.to_json_dict() for c in self.checks],
        }

    def summary_lines(self) -> list[str]:
        lines = []
        for c in self.checks:
            status = "pass" if c.ok else "FAIL"
            line = f"{status}  {c.name}: {c.passed}/{c.checked}"
            if c.first_failure is not None:
                line += f"  first failure: {c.first_failure}"
            lines.append(line)
        return lines

"""Pass/fail containers for statistical estimates with explicit tolerances."""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class StatEntry:
    """One named estimate with its expected value and tolerance band."""

    name: str
    estimate: float
    expected: float
    tolerance: float
    sample_count: int

    @property
    def passed(self) -> bool:
        return abs(self.estimate - self.expected) <= self.tolerance

    def to_dict(self) -> dict:
        return {
            "name": self.name,
            "estimate": self.estimate,
            "expected": self.expected,
            "tolerance": self.tolerance,
            "sample_count": self.sample_count,
            "pass": self.passed,
        }


@dataclass
class StatReport:
    """A list of StatEntry results; passes iff every entry passes."""

    entries: list[StatEntry] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(e.passed for e in self.entries)

    def failures(self) -> list[StatEntry]:
        return [e for e in self.entries if not e.passed]

    def entry(self, name: str) -> StatEntry:
        for e in self.entries:
            if e.name == name:
                return e
        raise KeyError(name)

    def to_dict(self) -> dict:
        return {"pass": self.passed, "entries": [e.to_dict() for e in self.entries]}

    def lines(self) -> list[str]:
        out = []
        for e in self.entries:
            mark = "ok " if e.passed else "FAIL"
            out.append(
                f"[{mark}] {e.name}: estimate={e.estimate:+.6f} "
                f"expected={e.expected:+.6f} tol={e.tolerance:.6f} n={e.sample_count}"
            )
        return out

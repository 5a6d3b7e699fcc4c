"""Small result types shared by the verifier, audits and validators."""
from __future__ import annotations

from dataclasses import dataclass


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    witness: str | None = None

    def __bool__(self) -> bool:
        return self.passed


class CheckReport:
    """An ordered collection of named exact checks."""

    def __init__(self, results: list[CheckResult]):
        self.results = list(results)
        self._by_name = {r.name: r for r in self.results}

    @property
    def passed(self) -> bool:
        return all(r.passed for r in self.results)

    @property
    def failures(self) -> list[CheckResult]:
        return [r for r in self.results if not r.passed]

    def __getitem__(self, name: str) -> CheckResult:
        return self._by_name[name]

    def __iter__(self):
        return iter(self.results)

    def __len__(self) -> int:
        return len(self.results)

    def to_json(self) -> dict:
        out = {}
        for r in self.results:
            out[r.name] = True if r.passed else {"passed": False, "witness": r.witness or ""}
        return out

    def __repr__(self):
        bad = self.failures
        if not bad:
            return f"CheckReport({len(self.results)} passed)"
        return f"CheckReport({len(bad)} failed: {[r.name for r in bad]})"

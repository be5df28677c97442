from __future__ import annotations

from dataclasses import dataclass, field


@dataclass
class Report:
    """Outcome of a verification: one row per checked case plus an overall verdict."""

    name: str
    params: dict
    rows: list = field(default_factory=list)
    passed: bool = True
    counterexample: object = None
    extra: dict = field(default_factory=dict)

    def __bool__(self):
        return self.passed

    def fail(self, counterexample):
        if self.passed:
            self.counterexample = counterexample
        self.passed = False

    def to_dict(self):
        d = {"check": self.name, **self.params, "passed": self.passed, "rows": self.rows}
        if self.extra:
            d.update(self.extra)
        if self.counterexample is not None:
            d["counterexample"] = self.counterexample
        return d

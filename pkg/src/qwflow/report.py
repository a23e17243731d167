"""Pass/fail records produced by the flow and current verifiers."""

from dataclasses import dataclass, field


@dataclass(frozen=True)
class Check:
    condition: str
    passed: bool
    max_violation: float

    def to_dict(self):
        return {"condition": self.condition, "pass": bool(self.passed), "max_violation": float(self.max_violation)}


@dataclass
class Report:
    checks: list = field(default_factory=list)

    def add(self, condition, violation, tol):
        violation = float(violation) if violation > 0 else 0.0
        self.checks.append(Check(condition, violation <= tol, violation))

    @property
    def passed(self):
        return all(c.passed for c in self.checks)

    def __getitem__(self, condition):
        for c in self.checks:
            if c.condition == condition:
                return c
        raise KeyError(condition)

    def failed(self):
        return [c.condition for c in self.checks if not c.passed]

    def to_records(self):
        return [c.to_dict() for c in self.checks]

    def __add__(self, other):
        return Report(self.checks + other.checks)

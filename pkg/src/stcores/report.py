"""Pass/fail records for exact comparisons."""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction


@dataclass(frozen=True)
class Check:
    """One exact comparison ``lhs == rhs``, labelled by claim and parameters."""

    claim: str
    lhs: int | Fraction
    rhs: int | Fraction
    params: dict = field(default_factory=dict)

    @property
    def equal(self) -> bool:
        return self.lhs == self.rhs

    def label(self) -> str:
        args = ",".join(f"{k}={v}" for k, v in self.params.items())
        return f"{self.claim}({args})"

    def to_json(self) -> dict:
        return {
            "claim": self.claim,
            "params": {k: str(v) for k, v in self.params.items()},
            "lhs": str(self.lhs),
            "rhs": str(self.rhs),
            "equal": self.equal,
        }


class Report(list):
    """A list of Checks with a couple of summary helpers."""

    @property
    def ok(self) -> bool:
        return all(c.equal for c in self)

    @property
    def failures(self) -> list[Check]:
        return [c for c in self if not c.equal]

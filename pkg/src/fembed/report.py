"""Witness-bearing outcome of checking one law on one instance."""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from fractions import Fraction

from fembed.setrep import FiniteSet

OUTCOMES = ("pass", "fail", "vacuous", "unknown")


@dataclass(frozen=True)
class LawReport:
    law: str
    instance: str
    outcome: str
    witness: dict = field(default_factory=dict)

    def __post_init__(self):
        if self.outcome not in OUTCOMES:
            raise ValueError(f"outcome must be one of {OUTCOMES}")

    @property
    def failed(self) -> bool:
        return self.outcome == "fail"

    def to_json(self) -> dict:
        return {"law": self.law, "instance": self.instance, "outcome": self.outcome,
                "witness": jsonable(self.witness)}

    def to_line(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def jsonable(value):
    """Convert witnesses (sets, fractions, verdict parts) into plain JSON values."""
    if isinstance(value, dict):
        return {str(k): jsonable(v) for k, v in value.items()}
    if isinstance(value, (set, frozenset)):
        return [jsonable(v) for v in sorted(value)]
    if isinstance(value, (list, tuple)):
        return [jsonable(v) for v in value]
    if isinstance(value, FiniteSet):
        return list(value.elements)
    if isinstance(value, Fraction):
        return str(value)
    if value is None or isinstance(value, (bool, int, float, str)):
        return value
    if hasattr(value, "__dataclass_fields__"):
        return {k: jsonable(getattr(value, k)) for k in value.__dataclass_fields__}
    return str(value)

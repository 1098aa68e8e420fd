"""Three-valued answers carrying witnesses, certificates or horizon reasons."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Any


class Outcome(enum.Enum):
    YES = "yes"
    NO = "no"
    UNKNOWN = "unknown"

    def __str__(self) -> str:
        return self.value.capitalize()


@dataclass(frozen=True)
class TriVerdict:
    """An answer that is Yes, No or Unknown.

    ``witness`` is the positive evidence for Yes (a translate, an AP, ...) or
    the finite certificate for No.  ``reason`` explains an Unknown, usually by
    naming the horizon that was exhausted.
    """

    outcome: Outcome
    witness: Any = None
    reason: str = ""

    @classmethod
    def yes(cls, witness: Any = None, reason: str = "") -> TriVerdict:
        return cls(Outcome.YES, witness, reason)

    @classmethod
    def no(cls, witness: Any = None, reason: str = "") -> TriVerdict:
        return cls(Outcome.NO, witness, reason)

    @classmethod
    def unknown(cls, reason: str, witness: Any = None) -> TriVerdict:
        return cls(Outcome.UNKNOWN, witness, reason)

    @classmethod
    def of_bool(cls, value: bool | None, witness: Any = None, reason: str = "") -> TriVerdict:
        if value is None:
            return cls.unknown(reason, witness)
        return cls.yes(witness, reason) if value else cls.no(witness, reason)

    @property
    def is_yes(self) -> bool:
        return self.outcome is Outcome.YES

    @property
    def is_no(self) -> bool:
        return self.outcome is Outcome.NO

    @property
    def is_unknown(self) -> bool:
        return self.outcome is Outcome.UNKNOWN

    @property
    def definite(self) -> bool:
        return self.outcome is not Outcome.UNKNOWN

    def as_bool(self) -> bool | None:
        if self.outcome is Outcome.UNKNOWN:
            return None
        return self.outcome is Outcome.YES

    def __bool__(self) -> bool:
        raise TypeError("TriVerdict has no truth value; use .is_yes / .as_bool()")

    def __str__(self) -> str:
        text = str(self.outcome)
        if self.reason:
            text += f" ({self.reason})"
        return text


def tri_and(left: TriVerdict, right: TriVerdict) -> TriVerdict:
    """Kleene conjunction; a No on either side wins and keeps its certificate."""
    if left.is_no:
        return left
    if right.is_no:
        return right
    if left.is_unknown:
        return left
    if right.is_unknown:
        return right
    return TriVerdict.yes((left.witness, right.witness))

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Any

HOLDS = "holds"
FAILS = "fails"
HORIZON = "verifiedToHorizon"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a check.

    ``holds`` is proof by exhaustion, ``verifiedToHorizon`` is evidence from a
    windowed model of an infinite one, and ``fails`` carries a witness that
    replays the violation.
    """

    status: str
    witness: Any = None
    horizon: int | None = None
    info: dict = field(default_factory=dict, compare=False)

    def __bool__(self) -> bool:
        return self.status != FAILS

    @property
    def failed(self) -> bool:
        return self.status == FAILS

    @classmethod
    def holds(cls, witness=None, horizon: int | None = None, **info) -> "Verdict":
        if horizon is not None:
            return cls(HORIZON, witness, horizon, info)
        return cls(HOLDS, witness, None, info)

    @classmethod
    def fails(cls, witness, **info) -> "Verdict":
        return cls(FAILS, witness, None, info)

    def to_json(self) -> dict:
        out: dict = {"status": self.status}
        if self.witness is not None:
            out["witness"] = self.witness
        if self.horizon is not None:
            out["horizon"] = self.horizon
        if self.info:
            out["info"] = self.info
        return out


def conjunction(named: dict[str, Verdict], horizon: int | None = None) -> Verdict:
    """First failing part wins (in insertion order); otherwise positive."""
    for name, v in named.items():
        if v.failed:
            return Verdict.fails({"failed": name, "witness": v.witness})
    return Verdict.holds({k: v.witness for k, v in named.items()}, horizon)

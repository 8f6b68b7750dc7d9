"""Finite subsets encoded as integer bitmasks, and the ground sets they live in.

Bit ``i`` of a mask is set iff element ``i`` belongs to the subset, so numeric
order on masks is the canonical enumeration order of the powerset.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Iterator


def mask(elements: Iterable[int]) -> int:
    m = 0
    for e in elements:
        if e < 0:
            raise ValueError(f"negative element {e}")
        m |= 1 << e
    return m


def bits(m: int) -> list[int]:
    """Sorted elements of the subset encoded by ``m``."""
    out = []
    i = 0
    while m:
        if m & 1:
            out.append(i)
        m >>= 1
        i += 1
    return out


def popcount(m: int) -> int:
    return bin(m).count("1")


def lowest(m: int) -> int:
    """Least element of a non-empty mask."""
    if not m:
        raise ValueError("empty set has no minimum")
    return (m & -m).bit_length() - 1


def submasks(m: int) -> Iterator[int]:
    """All submasks of ``m`` in ascending numeric order."""
    subs = []
    s = m
    while True:
        subs.append(s)
        if s == 0:
            break
        s = (s - 1) & m
    return reversed(subs)


def interval(lo: int, hi: int) -> int:
    """Mask of the closed integer interval ``[lo, hi]``."""
    if hi < lo:
        return 0
    return ((1 << (hi + 1)) - 1) ^ ((1 << lo) - 1)


def is_subset(a: int, b: int) -> bool:
    return a & ~b == 0


@dataclass(frozen=True)
class GroundSet:
    """The support ``X``: either ``{0..size-1}`` or the naturals seen through a window.

    For the naturals, ``size`` is the horizon and every enumeration stays below it.
    """

    kind: str
    size: int

    def __post_init__(self):
        if self.kind not in ("finite", "naturals"):
            raise ValueError(f"unknown ground kind {self.kind!r}")
        if self.size < 1:
            raise ValueError("ground size/horizon must be at least 1")

    @classmethod
    def finite(cls, n: int) -> "GroundSet":
        return cls("finite", n)

    @classmethod
    def naturals(cls, horizon: int) -> "GroundSet":
        return cls("naturals", horizon)

    @property
    def is_finite(self) -> bool:
        return self.kind == "finite"

    @property
    def horizon(self) -> int | None:
        return None if self.is_finite else self.size

    @property
    def full(self) -> int:
        return (1 << self.size) - 1

    def subsets(self) -> range:
        return range(1 << self.size)

    def check(self, m: int) -> None:
        if m >> self.size:
            raise ValueError(f"{bits(m)} leaves the ground set of size {self.size}")

    def to_json(self) -> dict:
        if self.is_finite:
            return {"finite": self.size}
        return {"naturals": {"horizon": self.size}}

    @classmethod
    def from_json(cls, obj: dict) -> "GroundSet":
        if "finite" in obj:
            return cls.finite(int(obj["finite"]))
        if "naturals" in obj:
            return cls.naturals(int(obj["naturals"]["horizon"]))
        raise ValueError(f"bad ground description {obj!r}")

"""Ideals of subsets, the quotient ring P(X)/I and its finite spectrum."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .subsets import GroundSet, bits, is_subset, mask, popcount, submasks
from .verdict import Verdict

KINDS = ("principal", "sizeBelow", "generatedBy", "explicit", "frechet")


class InvalidIdeal(ValueError):
    def __init__(self, verdict: Verdict):
        super().__init__(f"not a valid ideal: {verdict.witness}")
        self.verdict = verdict


class MethodUnavailable(ValueError):
    pass


def symdiff(a: int, b: int) -> int:
    return a ^ b


@dataclass(frozen=True)
class Ideal:
    """A family of subsets of ``ground`` given by a description.

    ``data`` is a mask for ``principal``, a count for ``sizeBelow``, a tuple of
    masks for ``generatedBy``/``explicit`` and ``None`` for ``frechet``.
    Structured descriptions can still describe a non-ideal (``sizeBelow`` on a
    finite ground, say); :func:`ideal_validate` reports that.
    """

    ground: GroundSet
    kind: str
    data: object = None

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown ideal kind {self.kind!r}")
        if self.kind == "frechet" and self.ground.is_finite:
            raise ValueError("the Frechet ideal needs the naturals as ground")
        if self.kind in ("generatedBy", "explicit"):
            object.__setattr__(self, "data", tuple(sorted(set(self.data))))
            for m in self.data:
                self.ground.check(m)
        elif self.kind == "principal":
            self.ground.check(self.data)

    @classmethod
    def principal(cls, ground: GroundSet | int, elements) -> "Ideal":
        if isinstance(ground, int):
            ground = GroundSet.finite(ground)
        return cls(ground, "principal", mask(elements))

    @classmethod
    def frechet(cls, horizon: int) -> "Ideal":
        return cls(GroundSet.naturals(horizon), "frechet")

    def contains(self, a: int) -> bool:
        if self.kind == "principal":
            return is_subset(a, self.data)
        if self.kind == "sizeBelow":
            return popcount(a) < self.data
        if self.kind == "generatedBy":
            return is_subset(a, self._basis_union)
        if self.kind == "explicit":
            return a in self._family
        return True

    @cached_property
    def _basis_union(self) -> int:
        u = 0
        for m in self.data:
            u |= m
        return u

    @cached_property
    def _family(self) -> frozenset:
        return frozenset(self.data)

    @cached_property
    def members(self) -> tuple[int, ...]:
        """All members below the ground size/horizon, ascending."""
        if self.kind == "principal":
            return tuple(submasks(self.data))
        if self.kind == "explicit":
            return self.data
        return tuple(a for a in self.ground.subsets() if self.contains(a))

    @cached_property
    def union(self) -> int:
        """Union of all members (of the windowed family on the naturals)."""
        u = 0
        for a in self.members:
            u |= a
        return u

    def to_json(self) -> dict:
        if self.kind == "principal":
            desc = {"principal": bits(self.data)}
        elif self.kind == "sizeBelow":
            desc = {"sizeBelow": self.data}
        elif self.kind in ("generatedBy", "explicit"):
            desc = {self.kind: [bits(m) for m in self.data]}
        else:
            desc = {"frechet": True}
        return {"ground": self.ground.to_json(), "ideal": desc}

    @classmethod
    def from_json(cls, obj: dict, ground: GroundSet | None = None) -> "Ideal":
        if "ground" in obj:
            ground = GroundSet.from_json(obj["ground"])
        if ground is None:
            raise ValueError("ideal description lacks a ground set")
        desc = obj.get("ideal", obj)
        if len(desc) != 1:
            raise ValueError(f"ideal description must have exactly one key: {desc!r}")
        (kind, value), = desc.items()
        if kind == "principal":
            return cls(ground, kind, _canonical_mask(value))
        if kind == "sizeBelow":
            return cls(ground, kind, int(value))
        if kind in ("generatedBy", "explicit"):
            return cls(ground, kind, tuple(_canonical_mask(v) for v in value))
        if kind == "frechet":
            return cls(ground, kind)
        raise ValueError(f"unknown ideal kind {kind!r}")


def _canonical_mask(elements) -> int:
    elements = list(elements)
    if elements != sorted(set(elements)):
        raise ValueError(f"element list {elements} must be sorted without duplicates")
    return mask(elements)


def ideal_contains(ideal: Ideal, a: int) -> bool:
    return ideal.contains(a)


def ideal_validate(ideal: Ideal) -> Verdict:
    """Check downward closure, union closure and properness.

    Exhaustive on finite grounds, windowed on the naturals. The witness is
    a set (downward failure: the member and the missing subset; properness:
    the whole ground) or the least offending pair for union closure.
    """
    g = ideal.ground
    if ideal.kind == "frechet":
        return Verdict.holds()
    fam = ideal.members
    if not fam:
        return Verdict.fails({"violation": "empty", "family": []})
    member = set(fam)
    for a in fam:
        for e in bits(a):
            c = a & ~(1 << e)
            if c not in member:
                return Verdict.fails({"violation": "downward", "set": bits(a), "subset": bits(c)})
    if g.is_finite and ideal.union not in member:
        for a, b in combinations(fam, 2):
            if a | b not in member:
                return Verdict.fails({"violation": "union", "pair": [bits(a), bits(b)]})
    if not g.is_finite:
        # a windowed family can only be checked pairwise
        for a, b in combinations(fam, 2):
            if a | b not in member:
                return Verdict.fails({"violation": "union", "pair": [bits(a), bits(b)]})
        return Verdict.holds(horizon=g.size)
    if g.full in member:
        return Verdict.fails({"violation": "proper", "set": bits(g.full)})
    return Verdict.holds()


def ideal_normalize(ideal: Ideal) -> Ideal:
    """The principal description ``P(union I)`` of a valid ideal on a finite ground."""
    if not ideal.ground.is_finite:
        raise MethodUnavailable("normal form exists only on finite grounds")
    v = ideal_validate(ideal)
    if v.failed:
        raise InvalidIdeal(v)
    return Ideal(ideal.ground, "principal", ideal.union)


@dataclass(frozen=True)
class QuotientRing:
    ideal: Ideal
    cosets: tuple[int, ...]
    classes: tuple[tuple[int, ...], ...]

    def __len__(self) -> int:
        return len(self.cosets)

    def coset_of(self, a: int) -> int:
        for rep, cls in zip(self.cosets, self.classes):
            if a in cls:
                return rep
        raise KeyError(a)


def quotient_cosets(ideal: Ideal) -> QuotientRing:
    """Classes of ``Y ~ Z  iff  Y ^ Z in I`` over the whole powerset.

    Scans subsets in ascending order, so each representative is the least
    member of its class. Assumes ``I`` is valid (the relation is then an
    equivalence); each class is the translate ``Y + I``.
    """
    if not ideal.ground.is_finite:
        raise MethodUnavailable("P(X)/I is not enumerable on the naturals")
    n = ideal.ground.size
    fam = ideal.members
    seen = bytearray(1 << n)
    reps, classes = [], []
    for y in range(1 << n):
        if seen[y]:
            continue
        cls = sorted(y ^ j for j in fam)
        for z in cls:
            seen[z] = 1
        reps.append(y)
        classes.append(tuple(cls))
    return QuotientRing(ideal, tuple(reps), tuple(classes))


def ideal_hat(ideal: Ideal) -> int:
    """Points whose principal ultrafilter contains the dual filter: ``{x : {x} not in I}``."""
    if not ideal.ground.is_finite:
        raise MethodUnavailable("only fixed ultrafilters are computed")
    return sum(1 << x for x in range(ideal.ground.size) if not ideal.contains(1 << x))


def iota(ideal: Ideal) -> int:
    return popcount(ideal_hat(ideal))


def maximal_ideal(ground: GroundSet, x: int) -> Ideal:
    return Ideal(ground, "principal", ground.full & ~(1 << x))


def intersection_family(ground: GroundSet, points: int) -> frozenset:
    """Members of the intersection of the maximal ideals ``P(X minus {x})`` for ``x`` in ``points``."""
    return frozenset(a for a in ground.subsets() if a & points == 0)


def iota_bruteforce(ideal: Ideal) -> int:
    """Least number of maximal ideals intersecting to ``I``, by search over all collections."""
    g = ideal.ground
    target = frozenset(a for a in g.subsets() if ideal.contains(a))
    for k in range(g.size + 1):
        for pts in combinations(range(g.size), k):
            if intersection_family(g, mask(pts)) == target:
                return k
    raise ValueError("ideal is not an intersection of maximal ideals")

"""Hyperballeans on the powerset: exp, closed-form hyperballs, the Cartesian
ballean, the macrocube, components and the number of components.

Points of every ballean here are subsets of the ground, encoded as masks.
"""

from __future__ import annotations

from functools import lru_cache

from .core import (Ballean, ContractViolation, SetBallean, SubBallean, as_set, iary,
                   is_bounded, point_ideal)
from .ideals import Ideal, MethodUnavailable, ideal_hat, quotient_cosets
from .subsets import bits, is_subset, popcount, submasks
from .unionfind import UnionFind


class EmptySetFlavorMismatch(ValueError):
    pass


FLAVORS = ("pointIdeal", "iary", "genericPointIdeal", "genericIary", "expStarPointIdeal",
           "expStarIary", "flatPointIdeal", "flatIary", "cartesian", "macrocube")
EXP_FLAVORS = ("pointIdeal", "iary", "genericPointIdeal", "genericIary")
STAR_FLAVORS = ("expStarPointIdeal", "expStarIary")


def exp_ball_generic(b: SetBallean, a: int, r, candidates=None) -> frozenset:
    """``{C : A within B(C, r) and C within B(A, r)}`` by enumeration."""
    around_a = b.ball_of_mask(a, r)
    if candidates is None:
        candidates = submasks(b.support)
    return frozenset(c for c in candidates
                     if is_subset(c, around_a) and is_subset(a, b.ball_of_mask(c, r)))


def exp_ball_point_ideal(ideal: Ideal, a: int, k: int) -> frozenset:
    if not ideal.contains(k):
        raise ContractViolation(f"radius {bits(k)} is not in the ideal")
    if a & k == 0:
        return frozenset([a])
    rest = a & ~k
    return frozenset(rest | y for y in submasks(k) if y)


def exp_ball_iary(ideal: Ideal, a: int, k: int) -> frozenset:
    if not ideal.contains(k):
        raise ContractViolation(f"radius {bits(k)} is not in the ideal")
    if a == 0:
        return frozenset([0])
    rest = a & ~k
    return frozenset(z for z in (rest | y for y in submasks(k)) if z)


def cartesian_ball(ideal: Ideal, a: int, k: int) -> frozenset:
    """Sets agreeing with ``a`` off ``k``."""
    if not ideal.contains(k):
        raise ContractViolation(f"radius {bits(k)} is not in the ideal")
    rest = a & ~k
    return frozenset(rest | y for y in submasks(k))


class HyperBallean(Ballean):
    """A ballean on subsets of a ground, with a ball rule over masks."""

    def __init__(self, ideal: Ideal, flavor: str, support, radii, chain, rule):
        self.ideal = ideal
        self.flavor = flavor
        self._support = support
        self._rule = rule
        horizon = ideal.ground.horizon if ideal is not None else None
        super().__init__(None, radii, None, name=flavor, horizon=horizon, chain=chain)

    @property
    def points(self) -> tuple:
        if self._points is None:
            self._points = tuple(self._support())
        return self._points

    def ball(self, a, r):
        return self._rule(a, r)

    def show_point(self, p):
        return bits(p)


class ExpBallean(HyperBallean):
    """``exp`` of a set-ballean, balls by the defining comprehension."""

    def __init__(self, base: SetBallean, ideal: Ideal | None = None, flavor: str | None = None):
        self.base = base
        super().__init__(ideal if ideal is not None else getattr(base, "ideal", None),
                         flavor or f"exp({base.name})", lambda: submasks(base.support),
                         base.radii, base.chain, self._generic)
        self.horizon = base.horizon

    def _generic(self, a, r):
        return exp_ball_generic(self.base, a, r)

    def ball_within(self, a, r, support):
        return exp_ball_generic(self.base, a, r, sorted(support))


def exp_ballean(base: SetBallean) -> ExpBallean:
    return ExpBallean(base)


@lru_cache(maxsize=None)
def hyperballean(ideal: Ideal, flavor: str) -> Ballean:
    """The hyperballean of ``ideal`` in the named flavor.

    ``pointIdeal``/``iary`` use the closed-form balls, ``generic*`` the
    comprehension over the base ballean.
    """
    g = ideal.ground
    if flavor == "genericPointIdeal":
        return ExpBallean(point_ideal(ideal), ideal, flavor)
    if flavor == "genericIary":
        return ExpBallean(iary(ideal), ideal, flavor)
    base = point_ideal(ideal)
    radii, chain = base.radii, base.chain
    if flavor == "pointIdeal":
        return HyperBallean(ideal, flavor, g.subsets, radii, chain,
                            lambda a, k: exp_ball_point_ideal(ideal, a, k))
    if flavor == "iary":
        return HyperBallean(ideal, flavor, g.subsets, radii, chain,
                            lambda a, k: exp_ball_iary(ideal, a, k))
    if flavor == "cartesian":
        return HyperBallean(ideal, flavor, g.subsets, radii, chain,
                            lambda a, k: cartesian_ball(ideal, a, k))
    if flavor == "macrocube":
        return SubBallean(hyperballean(ideal, "cartesian"), ideal.members, name=flavor)
    if flavor in STAR_FLAVORS:
        whole = hyperballean(ideal, "pointIdeal" if flavor == "expStarPointIdeal" else "iary")
        return SubBallean(whole, range(1, 1 << g.size), name=flavor)
    if flavor in ("flatPointIdeal", "flatIary"):
        b = point_ideal(ideal) if flavor == "flatPointIdeal" else iary(ideal)
        whole = hyperballean(ideal, "pointIdeal" if flavor == "flatPointIdeal" else "iary")
        return SubBallean(whole, flat_support(b), name=flavor)
    raise ValueError(f"unknown flavor {flavor!r}")


def flat_support(b: SetBallean) -> tuple[int, ...]:
    """Non-empty bounded subsets of ``b``."""
    if b.horizon is not None:
        raise MethodUnavailable("bounded subsets are enumerated on finite models only")
    return tuple(a for a in submasks(b.support) if a and is_bounded(b, bits(a)))


def are_close(ideal: Ideal, y: int, z: int, flavor: str = "cartesian") -> bool:
    """Same component: ``Y ^ Z`` in the ideal, with the empty set isolated in exp flavors."""
    if flavor != "cartesian" and (y == 0 or z == 0):
        if y == z:
            return True
        raise EmptySetFlavorMismatch(f"the empty set is isolated in flavor {flavor}")
    return ideal.contains(y ^ z)


def components(b: Ballean) -> list[tuple]:
    """Connected components by closing under balls of the chain radii."""
    uf = UnionFind(b.points)
    for p in b.points:
        for r in b.chain:
            for q in b.ball(p, r):
                uf.union(p, q)
    return uf.classes()


def components_exp(ideal: Ideal, flavor: str) -> list[tuple]:
    return components(hyperballean(ideal, flavor))


def close_classes(ideal: Ideal, flavor: str) -> list[tuple]:
    """Partition of the support into classes of :func:`are_close`."""
    h = hyperballean(ideal, flavor)
    uf = UnionFind(h.points)
    pts = h.points
    for i, y in enumerate(pts):
        for z in pts[i + 1:]:
            try:
                if are_close(ideal, y, z, "cartesian" if flavor in ("cartesian", "macrocube")
                             else flavor):
                    uf.union(y, z)
            except EmptySetFlavorMismatch:
                pass
    return uf.classes()


def dsc(ideal: Ideal, flavor: str = "cartesian", method: str = "components") -> int:
    """Number of connected components, by ball closure, by cosets, or by ``2**iota``."""
    if flavor not in ("cartesian", *EXP_FLAVORS, *STAR_FLAVORS):
        raise MethodUnavailable(f"dsc is not defined for flavor {flavor}")
    if not ideal.ground.is_finite:
        raise MethodUnavailable("the dual spectrum of a Frechet ideal is infinite")
    if method == "components":
        return len(components_exp(ideal, flavor))
    if method == "quotient":
        base = len(quotient_cosets(ideal))
    elif method == "crt":
        base = 2 ** popcount(ideal_hat(ideal))
    else:
        raise ValueError(f"unknown method {method!r}")
    return base + 1 if flavor in EXP_FLAVORS else base


def family(points) -> list[list[int]]:
    return [bits(p) for p in sorted(as_set(points))]


class ProductBallean(Ballean):
    """Cartesian product; a pair ``(p, q)`` is packed as ``p | q << shift``, radii likewise."""

    def __init__(self, left: Ballean, right: Ballean, shift: int):
        self.left, self.right, self.shift = left, right, shift
        lo = (1 << shift) - 1
        self._lo = lo
        points = [p | q << shift for p in left.points for q in right.points]
        radii = [r | s << shift for r in left.radii for s in right.radii]
        chain = [r | s << shift for r, s in zip(left.chain, right.chain)]
        super().__init__(points, radii, None, name=f"{left.name}x{right.name}",
                         horizon=left.horizon, chain=chain)

    def split(self, p) -> tuple[int, int]:
        return p & self._lo, p >> self.shift

    def ball(self, p, r):
        (a, b), (k, l) = self.split(p), self.split(r)
        return frozenset(u | v << self.shift
                         for u in self.left.ball(a, k) for v in self.right.ball(b, l))

    def show_point(self, p):
        a, b = self.split(p)
        return [self.left.show_point(a), self.right.show_point(b)]

    def show_radius(self, r):
        k, l = self.split(r)
        return [self.left.show_radius(k), self.right.show_radius(l)]

"""Balleans, their instances built from ideals, and the size/shape predicates.

A :class:`Ballean` has hashable integer points, a tuple of radii, and a ball
function returning a frozenset of points. Quantifiers over radii range over
``radii``: every radius on finite models, and the probe segments ``[0, n]``
with ``n < horizon // 2`` on windowed models of the naturals. Keeping the
probe radii well inside the window is what lets unboundedness show up at
all; against the full window every finite set would be bounded.
"""

from __future__ import annotations

from functools import lru_cache
from typing import Callable, Iterable

from .ideals import Ideal, ideal_validate
from .subsets import GroundSet, bits, interval, is_subset, mask, submasks
from .verdict import Verdict


class ContractViolation(ValueError):
    pass


class ImproperSatellite(ValueError):
    pass


def as_set(points: Iterable[int]) -> frozenset:
    return points if isinstance(points, frozenset) else frozenset(points)


class Ballean:
    """Support points, radii and a ball function ``(point, radius) -> frozenset``."""

    def __init__(self, points, radii, ball: Callable | None = None, *, name: str = "ballean",
                 horizon: int | None = None, chain=None):
        self._points = tuple(points) if points is not None else None
        self.radii = tuple(radii)
        self._ball = ball
        self.name = name
        self.horizon = horizon
        self.chain = tuple(chain) if chain is not None else self.radii

    @property
    def points(self) -> tuple:
        return self._points

    @property
    def point_set(self) -> frozenset:
        return frozenset(self.points)

    def ball(self, p, r) -> frozenset:
        return as_set(self._ball(p, r))

    def ball_of_set(self, ps, r) -> frozenset:
        out = set()
        for p in ps:
            out |= self.ball(p, r)
        return frozenset(out)

    def ball_within(self, p, r, support: frozenset) -> frozenset:
        return self.ball(p, r) & support

    def show_point(self, p):
        return p

    def show_radius(self, r):
        return bits(r) if isinstance(r, int) else r

    def show_set(self, ps) -> list:
        return [self.show_point(p) for p in sorted(ps)]

    def __repr__(self):
        return f"<{type(self).__name__} {self.name}>"


class SetBallean(Ballean):
    """A ballean on ground elements ``0..n-1`` with mask-valued balls.

    Subclasses implement :meth:`ball_mask`; the frozenset API is derived.
    """

    def __init__(self, ground: GroundSet, support: int, radii, ball_mask: Callable | None = None,
                 *, name: str = "ballean", chain=None):
        self.ground = ground
        self.support = support
        self._ball_mask = ball_mask
        super().__init__(bits(support), radii, None, name=name, horizon=ground.horizon, chain=chain)

    def ball_mask(self, x: int, r: int) -> int:
        return self._ball_mask(x, r)

    def ball(self, x, r) -> frozenset:
        return frozenset(bits(self.ball_mask(x, r)))

    def ball_of_mask(self, a: int, r: int) -> int:
        out = 0
        for x in bits(a):
            out |= self.ball_mask(x, r)
        return out

    def ball_of_set(self, ps, r) -> frozenset:
        return frozenset(bits(self.ball_of_mask(mask(ps), r)))


def ball_point_ideal(ideal: Ideal, x: int, a: int) -> int:
    """``{x}`` off the radius, the radius itself on it."""
    if not ideal.contains(a):
        raise ContractViolation(f"radius {bits(a)} is not in the ideal")
    return a if a >> x & 1 else 1 << x


def ball_iary(ideal: Ideal, x: int, a: int) -> int:
    if not ideal.contains(a):
        raise ContractViolation(f"radius {bits(a)} is not in the ideal")
    return a | 1 << x


def ideal_radii(ideal: Ideal) -> tuple[tuple[int, ...], tuple[int, ...]]:
    """``(radii, chain)`` for a ballean whose radius set is ``ideal``.

    Finite: every member, plus the maximal chain adding the elements of the
    union one at a time. Naturals: probe segments for the radii and the full
    window of segments for the chain.
    """
    g = ideal.ground
    if g.is_finite:
        chain = [0]
        for e in bits(ideal.union):
            chain.append(chain[-1] | 1 << e)
        return ideal.members, tuple(chain)
    segs = tuple(interval(0, n) for n in range(g.size) if ideal.contains(interval(0, n)))
    probe = tuple(s for s in segs if s.bit_length() <= g.size // 2)
    return probe, segs


class PointIdealBallean(SetBallean):
    def __init__(self, ideal: Ideal):
        self.ideal = ideal
        radii, chain = ideal_radii(ideal)
        super().__init__(ideal.ground, ideal.ground.full, radii, name="pointIdeal", chain=chain)

    def ball_mask(self, x, r):
        return ball_point_ideal(self.ideal, x, r)


class IAryBallean(SetBallean):
    def __init__(self, ideal: Ideal):
        self.ideal = ideal
        radii, chain = ideal_radii(ideal)
        super().__init__(ideal.ground, ideal.ground.full, radii, name="iary", chain=chain)

    def ball_mask(self, x, r):
        return ball_iary(self.ideal, x, r) & self.ground.full


class SubSetBallean(SetBallean):
    def __init__(self, base: SetBallean, support: int, name: str | None = None):
        if not is_subset(support, base.support):
            raise ContractViolation("subballean support must lie in the base support")
        self.base = base
        super().__init__(base.ground, support, base.radii, name=name or f"sub({base.name})",
                         chain=base.chain)

    def ball_mask(self, x, r):
        return self.base.ball_mask(x, r) & self.support


class SubBallean(Ballean):
    """Restriction of an arbitrary ballean to a subset of its points."""

    def __init__(self, base: Ballean, support: Iterable, name: str | None = None):
        support = frozenset(support)
        if not support <= base.point_set:
            raise ContractViolation("subballean support must lie in the base support")
        self.base = base
        self.support = support
        super().__init__(sorted(support), base.radii, None, name=name or f"sub({base.name})",
                         horizon=base.horizon, chain=base.chain)

    def ball(self, p, r):
        return self.base.ball_within(p, r, self.support)

    def ball_within(self, p, r, support):
        return self.base.ball_within(p, r, self.support & support)

    def show_point(self, p):
        return self.base.show_point(p)


def make_subballean(b: Ballean, support) -> Ballean:
    if isinstance(b, SetBallean):
        return SubSetBallean(b, support if isinstance(support, int) else mask(support))
    return SubBallean(b, support)


def positive(b: Ballean, witness=None, **info) -> Verdict:
    return Verdict.holds(witness, b.horizon, **info)


def ball_of_set(b: Ballean, a, r) -> frozenset:
    return b.ball_of_set(a, r)


def radii_leq(b: Ballean, alpha, beta) -> bool:
    return all(b.ball(x, alpha) <= b.ball(x, beta) for x in b.points)


def verify_axioms(b: Ballean) -> Verdict:
    """Containment, symmetry and upper multiplicativity over all points and radii.

    The multiplicativity witness table maps each ``(alpha, beta)`` to the least
    radius ``gamma`` that works.
    """
    pts = b.points
    balls = {r: {x: b.ball(x, r) for x in pts} for r in b.radii}
    for r in b.radii:
        for x in pts:
            if x not in balls[r][x]:
                return Verdict.fails({"axiom": "containment", "x": b.show_point(x),
                                      "radius": b.show_radius(r)})
    for r in b.radii:
        for x in pts:
            for y in sorted(balls[r][x]):
                if y in balls[r][x] and y in balls[r] and x not in balls[r][y]:
                    return Verdict.fails({"axiom": "symmetry", "x": b.show_point(x),
                                          "y": b.show_point(y), "radius": b.show_radius(r)})
    table = []
    for a in b.radii:
        for bb in b.radii:
            row = balls[bb]
            double = {x: frozenset().union(*(row[y] if y in row else b.ball(y, bb)
                                             for y in balls[a][x])) for x in pts}
            gamma = next((g for g in b.radii
                          if all(double[x] <= balls[g][x] for x in pts)), None)
            if gamma is None:
                return Verdict.fails({"axiom": "multiplicativity", "alpha": b.show_radius(a),
                                      "beta": b.show_radius(bb)})
            table.append([b.show_radius(a), b.show_radius(bb), b.show_radius(gamma)])
    return positive(b, {"gamma": table})


def component(b: Ballean, x) -> frozenset:
    out = set()
    for r in b.chain:
        out |= b.ball(x, r)
    return frozenset(out)


def is_bounded(b: Ballean, a) -> Verdict:
    """Search radii in ascending order for one ball around every point of ``a`` covering ``a``."""
    a = as_set(a)
    if not a:
        return positive(b, {"radius": None})
    misses = []
    for r in b.radii:
        bad = next((y for y in sorted(a) if not a <= b.ball(y, r)), None)
        if bad is None:
            return positive(b, {"radius": b.show_radius(r)})
        misses.append([b.show_radius(r), b.show_point(bad)])
    return Verdict.fails({"set": b.show_set(a), "misses": misses})


def is_large(b: Ballean, a) -> Verdict:
    a, whole = as_set(a), b.point_set
    for r in b.radii:
        if b.ball_of_set(a, r) >= whole:
            return positive(b, {"radius": b.show_radius(r)})
    return Verdict.fails({"set": b.show_set(a)})


def is_thick(b: Ballean, a) -> Verdict:
    a = as_set(a)
    centres = []
    for r in b.radii:
        x = next((x for x in sorted(a) if b.ball(x, r) <= a), None)
        if x is None:
            return Verdict.fails({"radius": b.show_radius(r)})
        centres.append([b.show_radius(r), b.show_point(x)])
    return positive(b, {"centres": centres})


def is_small(b: Ballean, a) -> Verdict:
    a, whole = as_set(a), b.point_set
    for r in b.radii:
        rest = whole - b.ball_of_set(a, r)
        if is_large(b, rest).failed:
            return Verdict.fails({"radius": b.show_radius(r), "complement": b.show_set(rest)})
    return positive(b)


def _bad_set_verdict(b: Ballean, bad_for: Callable, what: str) -> Verdict:
    """``for every radius, the points failing the local test form a bounded set``.

    A bounded ``V`` exists iff the failing set itself is bounded, since
    bounded sets are closed under subsets; that set is the reported ``V``.
    """
    table = []
    for r in b.radii:
        bad = frozenset(bad_for(r))
        if is_bounded(b, bad).failed:
            return Verdict.fails({"radius": b.show_radius(r), what: b.show_set(bad)})
        table.append([b.show_radius(r), b.show_set(bad)])
    return positive(b, {"V": table})


def is_thin(b: Ballean, a=None) -> Verdict:
    a = b.point_set if a is None else as_set(a)
    return _bad_set_verdict(
        b, lambda r: (x for x in a if b.ball(x, r) & a != {x}), "unbounded")


def is_slowly_oscillating(b: Ballean, f: Callable) -> Verdict:
    return _bad_set_verdict(
        b, lambda r: (x for x in b.points if len({f(y) for y in b.ball(x, r)}) > 1), "unbounded")


def bounded_family(b: SetBallean) -> tuple[int, ...]:
    """All bounded subsets of a finite set-ballean, as ascending masks."""
    if b.horizon is not None:
        raise ContractViolation("bounded families are enumerated on finite models only")
    return tuple(a for a in submasks(b.support) if is_bounded(b, bits(a)))


def make_satellite(b: SetBallean) -> tuple[SetBallean, Verdict]:
    """Point-ideal ballean whose radii are the bounded subsets of ``b``.

    Returns the satellite and the validation verdict of the bounded family
    read as an ideal (reported as data; on finite models it need not be
    union-closed).
    """
    fam = bounded_family(b)
    if b.support in fam:
        raise ImproperSatellite(f"{b.name} is bounded")
    flat = Ideal(b.ground, "explicit", fam)

    def ball(x, r):
        return r if r >> x & 1 else 1 << x

    sat = SetBallean(b.ground, b.support, fam, ball, name=f"satellite({b.name})")
    return sat, ideal_validate(flat)


def same_balls(b1: Ballean, b2: Ballean) -> bool:
    """Whether two balleans on one support have mutually cofinal ball families."""
    def dominated(p, q):
        return all(any(all(p.ball(x, r) <= q.ball(x, s) for x in p.points) for s in q.radii)
                   for r in p.radii)
    return b1.point_set == b2.point_set and dominated(b1, b2) and dominated(b2, b1)


@lru_cache(maxsize=None)
def point_ideal(ideal: Ideal) -> PointIdealBallean:
    return PointIdealBallean(ideal)


@lru_cache(maxsize=None)
def iary(ideal: Ideal) -> IAryBallean:
    return IAryBallean(ideal)

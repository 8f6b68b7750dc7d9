"""Maps between balleans: the morphism predicates and the named maps."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Callable

from .core import (Ballean, ContractViolation, SetBallean, SubBallean, iary, is_bounded,
                   is_large, point_ideal, positive)
from .hyper import ExpBallean, flat_support, hyperballean
from .ideals import Ideal
from .subsets import bits, mask, submasks
from .verdict import Verdict, conjunction


class UnboundedImage(ValueError):
    pass


@dataclass
class BalleanMap:
    domain: Ballean
    codomain: Ballean
    fn: Callable
    name: str = "map"

    def __call__(self, p):
        return self.fn(p)

    def image(self) -> dict:
        return {p: self.fn(p) for p in self.domain.points}

    def preimages(self) -> dict:
        pre: dict = {}
        for p, q in self.image().items():
            pre.setdefault(q, set()).add(p)
        return pre

    def is_injective(self) -> bool:
        img = self.image()
        return len(set(img.values())) == len(img)


def is_coarse(m: BalleanMap) -> Verdict:
    """For each domain radius, the least codomain radius absorbing the image balls."""
    dom, cod = m.domain, m.codomain
    img = m.image()
    table = []
    for a in dom.radii:
        pushed = {x: frozenset(img[y] for y in dom.ball(x, a)) for x in dom.points}
        misses = []
        for b in cod.radii:
            bad = next((x for x in dom.points if not pushed[x] <= cod.ball(img[x], b)), None)
            if bad is None:
                table.append([dom.show_radius(a), cod.show_radius(b)])
                break
            misses.append([cod.show_radius(b), dom.show_point(bad)])
        else:
            return Verdict.fails({"alpha": dom.show_radius(a), "misses": misses})
    return positive(dom, {"table": table})


def is_effectively_proper(m: BalleanMap) -> Verdict:
    """For each codomain radius, the least domain radius containing pulled-back balls."""
    dom, cod = m.domain, m.codomain
    img, pre = m.image(), m.preimages()
    table = []
    for a in cod.radii:
        pulled = {}
        for x in dom.points:
            s = set()
            for q in cod.ball(img[x], a):
                s |= pre.get(q, set())
            pulled[x] = s
        misses = []
        for b in dom.radii:
            bad = next((x for x in dom.points if not pulled[x] <= dom.ball(x, b)), None)
            if bad is None:
                table.append([cod.show_radius(a), dom.show_radius(b)])
                break
            misses.append([dom.show_radius(b), dom.show_point(bad)])
        else:
            return Verdict.fails({"alpha": cod.show_radius(a), "misses": misses})
    return positive(dom, {"table": table})


def _injective(m: BalleanMap) -> Verdict:
    seen = {}
    for p, q in m.image().items():
        if q in seen:
            return Verdict.fails({"collision": [m.domain.show_point(seen[q]),
                                                m.domain.show_point(p)]})
        seen[q] = p
    return positive(m.domain)


def _surjective(m: BalleanMap) -> Verdict:
    missing = m.codomain.point_set - set(m.image().values())
    if missing:
        return Verdict.fails({"missed": m.codomain.show_point(min(missing))})
    return positive(m.domain)


def is_coarse_embedding(m: BalleanMap) -> Verdict:
    return conjunction({"coarse": is_coarse(m), "proper": is_effectively_proper(m)},
                       m.domain.horizon)


def is_asymorphism(m: BalleanMap) -> Verdict:
    return conjunction({"injective": _injective(m), "surjective": _surjective(m),
                        "coarse": is_coarse(m), "proper": is_effectively_proper(m)},
                       m.domain.horizon)


def is_asymorphic_embedding(m: BalleanMap) -> Verdict:
    return conjunction({"injective": _injective(m), "coarse": is_coarse(m),
                        "proper": is_effectively_proper(m)}, m.domain.horizon)


def is_coarse_equivalence(m: BalleanMap) -> Verdict:
    return conjunction({"coarse": is_coarse(m), "proper": is_effectively_proper(m),
                        "large": is_large(m.codomain, set(m.image().values()))},
                       m.domain.horizon)


PROPERTIES = {
    "coarse": is_coarse,
    "proper": is_effectively_proper,
    "embedding": is_coarse_embedding,
    "asym": is_asymorphism,
    "asymEmbedding": is_asymorphic_embedding,
    "equiv": is_coarse_equivalence,
}


def _dominated_by(b: Ballean, radii, targets, support: frozenset) -> bool:
    """Every radius in ``radii`` is below some target on the points of ``support``."""
    pts = sorted(support)
    for a in radii:
        if not any(all(b.ball_within(x, a, support) <= b.ball_within(x, t, support) for x in pts)
                   for t in targets):
            return False
    return True


def check_remark_asy(m: BalleanMap, psi: dict) -> Verdict:
    """Ball-transport criterion for an injective map.

    ``psi`` maps a cofinal family of domain radii to codomain radii. Checks
    ``f(B(x, a)) == B(f(x), psi(a)) & f(X)`` for every point and every key,
    that the keys are cofinal in the domain and the values cofinal in the
    image, and then re-checks that ``m`` is a coarse embedding.
    """
    if not m.is_injective():
        raise ContractViolation(f"{m.name} is not injective")
    dom, cod = m.domain, m.codomain
    img = m.image()
    fx = frozenset(img.values())
    for a, b in psi.items():
        for x in dom.points:
            left = frozenset(img[y] for y in dom.ball(x, a))
            right = cod.ball_within(img[x], b, fx)
            if left != right:
                return Verdict.fails({"radius": dom.show_radius(a), "x": dom.show_point(x),
                                      "image": sorted(map(cod.show_point, left)),
                                      "ball": sorted(map(cod.show_point, right))})
    if not _dominated_by(dom, dom.radii, list(psi), dom.point_set):
        return Verdict.fails({"cofinal": "domain"})
    if not _dominated_by(cod, cod.radii, list(psi.values()), fx):
        return Verdict.fails({"cofinal": "image"})
    emb = is_coarse_embedding(m)
    if emb.failed:
        return Verdict.fails({"embedding": emb.witness})
    return positive(dom, {"psi": [[dom.show_radius(a), cod.show_radius(b)]
                                  for a, b in psi.items()]})


def _image_mask(fn: Callable, a: int) -> int:
    return mask(fn(x) for x in bits(a))


def map_exp(m: BalleanMap, domain: Ballean | None = None,
            codomain: Ballean | None = None) -> BalleanMap:
    """``A -> f(A)`` between the hyperballeans (generic ones unless given)."""
    if not isinstance(m.domain, SetBallean) or not isinstance(m.codomain, SetBallean):
        raise ContractViolation("exp lifts maps between set-balleans")
    dom = domain or ExpBallean(m.domain)
    cod = codomain or ExpBallean(m.codomain)
    return BalleanMap(dom, cod, lambda a: _image_mask(m.fn, a), f"exp({m.name})")


def map_flat(m: BalleanMap, domain: Ballean | None = None,
             codomain: Ballean | None = None) -> BalleanMap:
    """Restriction of ``exp f`` to non-empty bounded sets; needs bounded images."""
    lifted = map_exp(m, domain, codomain)
    src = flat_support(m.domain)
    dst = set(flat_support(m.codomain))
    for a in src:
        if lifted.fn(a) not in dst:
            raise UnboundedImage(f"{m.name} sends bounded {bits(a)} to unbounded "
                                 f"{bits(lifted.fn(a))}")
    return BalleanMap(SubBallean(lifted.domain, src, name=f"flat({m.domain.name})"),
                      SubBallean(lifted.codomain, dst, name=f"flat({m.codomain.name})"),
                      lifted.fn, f"flat({m.name})")


def identity(b: Ballean, target: Ballean | None = None, name: str = "id") -> BalleanMap:
    return BalleanMap(b, target or b, lambda p: p, name)


def map_id_point_to_iary(ideal: Ideal) -> BalleanMap:
    return identity(point_ideal(ideal), iary(ideal), "idX")


def map_j(ideal: Ideal) -> BalleanMap:
    """``exp id`` from exp of the point-ideal ballean to exp of the I-ary ballean."""
    return identity(hyperballean(ideal, "pointIdeal"), hyperballean(ideal, "iary"), "j")


def map_j_cartesian(ideal: Ideal) -> BalleanMap:
    return identity(hyperballean(ideal, "iary"), hyperballean(ideal, "cartesian"), "jCartesian")


def map_i_flat(ideal: Ideal) -> BalleanMap:
    return identity(hyperballean(ideal, "flatPointIdeal"), hyperballean(ideal, "flatIary"), "i")


def ultrafilter_support(ideal: Ideal, x: int) -> tuple[int, ...]:
    """Subsets containing ``x``."""
    return tuple(a for a in ideal.ground.subsets() if a >> x & 1)


def ideal_support(ideal: Ideal, x: int) -> tuple[int, ...]:
    """Members of the ideal containing ``x``."""
    return tuple(a for a in ideal.members if a >> x & 1)


def _check_point(ideal: Ideal, x: int):
    if not 0 <= x < ideal.ground.size:
        raise ContractViolation(f"point {x} is outside the ground")


def map_jx(ideal: Ideal, x: int) -> BalleanMap:
    _check_point(ideal, x)
    u = ultrafilter_support(ideal, x)
    return identity(SubBallean(hyperballean(ideal, "pointIdeal"), u, name="expPointIdeal|Ux"),
                    SubBallean(hyperballean(ideal, "iary"), u, name="expIary|Ux"), "jx")


def map_jx_cartesian(ideal: Ideal, x: int) -> BalleanMap:
    _check_point(ideal, x)
    u = ultrafilter_support(ideal, x)
    return identity(SubBallean(hyperballean(ideal, "pointIdeal"), u, name="expPointIdeal|Ux"),
                    hyperballean(ideal, "cartesian"), "jxCartesian")


def map_jx_flat(ideal: Ideal, x: int) -> BalleanMap:
    _check_point(ideal, x)
    ix = ideal_support(ideal, x)
    return identity(SubBallean(hyperballean(ideal, "flatPointIdeal"), ix, name="flatPointIdeal|Ix"),
                    SubBallean(hyperballean(ideal, "flatIary"), ix, name="flatIary|Ix"), "jxFlat")


def map_jx_macrocube(ideal: Ideal, x: int) -> BalleanMap:
    _check_point(ideal, x)
    ix = ideal_support(ideal, x)
    return identity(SubBallean(hyperballean(ideal, "flatPointIdeal"), ix, name="flatPointIdeal|Ix"),
                    hyperballean(ideal, "macrocube"), "jxMacrocube")


def map_C(b: SetBallean) -> BalleanMap:
    """``x -> X minus {x}`` into the hyperballean, onto its image."""
    img = [b.support & ~(1 << x) for x in b.points]
    cod = SubBallean(ExpBallean(b), img, name=f"C({b.name})")
    return BalleanMap(b, cod, lambda x: b.support & ~(1 << x), "C")


def map_CB(b: SetBallean) -> BalleanMap:
    """``A -> X minus A`` on non-empty bounded sets, into the whole hyperballean."""
    flat = flat_support(b)
    exp = ExpBallean(b)
    return BalleanMap(SubBallean(exp, flat, name=f"flat({b.name})"), exp,
                      lambda a: b.support & ~a, "CB")


def c_ball_identity(b: SetBallean) -> Verdict:
    """``C(B(x, V)) == expB(C(x), V) & C(X)`` for every point and radius."""
    m = map_C(b)
    fx = m.codomain.point_set
    for v in b.radii:
        for x in b.points:
            left = frozenset(m(y) for y in b.ball(x, v))
            right = m.codomain.base.ball_within(m(x), v, fx)
            if left != right:
                return Verdict.fails({"x": x, "radius": bits(v)})
    return positive(b)


def cb_properness_witness(b: SetBallean) -> Verdict:
    """Failure of effective properness of ``CB``, found the way the construction suggests.

    For radius ``V`` of the hyperballean and each radius ``W`` of the flat
    ballean, looks for a bounded ``A`` disjoint from ``W | V`` whose image
    ball meets the image in more than one point. Fails (i.e. ``CB`` is proper
    at ``V``) when some ``W`` has no such ``A``.
    """
    m = map_CB(b)
    flat = m.domain
    images = frozenset(m(a) for a in flat.points)
    for v in b.radii:
        if len(bits(v)) < 2:
            continue
        found = []
        for w in b.radii:
            hit = None
            for a in flat.points:
                if a & (w | v):
                    continue
                near = m.codomain.ball_within(m(a), v, images)
                if len(near) > 1:
                    hit = a
                    break
            if hit is None:
                break
            found.append([bits(w), bits(hit)])
        else:
            return positive(b, {"V": bits(v), "A_W": found})
    return Verdict.fails({"reason": "no radius with at least two points yields a witness"})


def bounded_image(m: BalleanMap) -> bool:
    return all(is_bounded(m.codomain, [m(p) for p in bits(a)])
               for a in submasks(m.domain.support) if is_bounded(m.domain, bits(a)))

"""Property suites: named, re-runnable bundles of checks with a JSON report.

A check carries the outcome its claim predicts (``holds`` or ``fails``) and
whether the model satisfies the claim's hypothesis. Disagreement inside the
hypothesis makes the report mixed; outside it the disagreement is data.
"""

from __future__ import annotations

import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from .core import (Ballean, ImproperSatellite, SetBallean, SubBallean, component, iary,
                   is_bounded, is_slowly_oscillating, is_thick, is_thin, make_satellite,
                   point_ideal, same_balls, verify_axioms)
from .hyper import (ExpBallean, ProductBallean, cartesian_ball, close_classes, components,
                    components_exp, dsc, exp_ball_generic, exp_ball_iary, exp_ball_point_ideal,
                    family, hyperballean)
from .ideals import Ideal, ideal_hat, ideal_validate, iota, iota_bruteforce, quotient_cosets
from .kcubes import (check_copies_close, check_copies_partition, check_cube_identity,
                     check_embedding_identity, check_finite_images, check_image_shape,
                     check_parity_lemma, kcube_psi, map_kcube_i, map_kcube_omega)
from .maps import (BalleanMap, UnboundedImage, c_ball_identity, cb_properness_witness,
                   check_remark_asy, identity, ideal_support, is_asymorphism, is_coarse,
                   is_coarse_embedding, is_coarse_equivalence, is_effectively_proper, map_C,
                   map_exp, map_flat, map_i_flat, map_id_point_to_iary, map_j, map_j_cartesian,
                   map_jx, map_jx_cartesian, map_jx_flat, map_jx_macrocube)
from .subsets import GroundSet, bits, lowest, popcount, submasks
from .verdict import FAILS, HOLDS, HORIZON, Verdict, conjunction

MIXED = "mixedWithWitnesses"


@dataclass
class Check:
    label: str
    claim: str
    verdict: Verdict
    expected: str | None = HOLDS
    in_hypothesis: bool = True

    @property
    def agrees(self) -> bool | None:
        if self.expected is None:
            return None
        return self.verdict.failed == (self.expected == FAILS)

    def to_json(self) -> dict:
        return {"label": self.label, "claim": self.claim, "expected": self.expected,
                "inHypothesis": self.in_hypothesis, "agrees": self.agrees,
                "verdict": self.verdict.to_json()}


@dataclass
class SuiteReport:
    suite: str
    model: dict
    checks: list[Check] = field(default_factory=list)
    notes: list[str] = field(default_factory=list)

    def add(self, label, claim, verdict, expected=HOLDS, in_hypothesis=True) -> Check:
        c = Check(label, claim, verdict, expected, in_hypothesis)
        self.checks.append(c)
        return c

    def __getitem__(self, label: str) -> Check:
        return next(c for c in self.checks if c.label == label)

    @property
    def disagreements(self) -> list[Check]:
        return [c for c in self.checks if c.in_hypothesis and c.agrees is False]

    @property
    def out_of_hypothesis(self) -> list[Check]:
        return [c for c in self.checks if not c.in_hypothesis and c.agrees is False]

    @property
    def overall(self) -> str:
        if self.disagreements:
            return MIXED
        if any(c.verdict.status == HORIZON for c in self.checks):
            return HORIZON
        return HOLDS

    def to_json(self) -> dict:
        checks = sorted(self.checks, key=lambda c: c.label)
        return {"suite": self.suite, "model": self.model,
                "checks": [c.to_json() for c in checks],
                "outOfHypothesisDisagreements": sorted(c.label for c in self.out_of_hypothesis),
                "notes": self.notes, "overall": self.overall}

    def dumps(self) -> str:
        return json.dumps(self.to_json(), sort_keys=True)


def agreement(pairs: dict) -> Verdict:
    """Holds when every named pair of values is equal, else the first mismatch."""
    for name, (left, right) in pairs.items():
        if left != right:
            return Verdict.fails({"check": name, "left": left, "right": right})
    return Verdict.holds()


def _tag(v: Verdict, horizon) -> Verdict:
    """Re-stamp a positive verdict as windowed evidence on horizon models."""
    if v.failed or horizon is None:
        return v
    return Verdict.holds(v.witness, horizon, **v.info)


# thin


def test_functions(b: SetBallean) -> list[tuple[str, Callable]]:
    """All ``{0,1}``-valued functions on a finite support, a fixed family on a window.

    The window family is: both constants, parity, period-4 and period-6
    blocks, and the indicator of the upper half of the window.
    """
    if b.horizon is None:
        pts = b.points
        return [(f"mask{m}", lambda x, m=m, pts=pts: m >> pts.index(x) & 1)
                for m in range(1 << len(pts))]
    h = b.horizon
    return [("const0", lambda x: 0), ("const1", lambda x: 1), ("parity", lambda x: x % 2),
            ("blocks2", lambda x: x // 2 % 2), ("blocks3", lambda x: x // 3 % 2),
            ("upperHalf", lambda x: int(x >= h // 2))]


def all_slowly_oscillating(b: SetBallean) -> Verdict:
    for name, f in test_functions(b):
        v = is_slowly_oscillating(b, f)
        if v.failed:
            return Verdict.fails({"function": name, **v.witness})
    return Verdict.holds(horizon=b.horizon)


def non_thick_bounded(b: SetBallean) -> Verdict:
    """Every non-thick subset is bounded; the least counterexample otherwise."""
    for a in submasks(b.support):
        s = bits(a)
        if is_thick(b, s).failed and is_bounded(b, s).failed:
            return Verdict.fails({"set": s})
    return Verdict.holds(horizon=b.horizon)


def is_connected(b: Ballean) -> bool:
    whole = b.point_set
    return all(component(b, x) == whole for x in b.points)


def lemma_thin(b: SetBallean) -> Verdict:
    """``C(Y)`` bounded in exp iff some radius gives every ``y`` in ``Y`` a ball with another point."""
    cx = map_C(b)
    exp_c = cx.codomain
    reach = b.support
    if b.horizon is not None:
        # on a window only the part covered by the probe radii can be tested
        reach = 0
        for r in b.radii:
            reach |= r
    for a in submasks(reach):
        ys = bits(a)
        left = not is_bounded(exp_c, [cx(y) for y in ys]).failed
        right = any(all(popcount(b.ball_mask(y, r)) > 1 for y in ys) for r in b.radii)
        if left != right:
            return Verdict.fails({"Y": ys, "boundedC": left, "radiusCondition": right})
    return Verdict.holds(horizon=b.horizon)


def _common_radius(thin: Verdict, osc: Verdict) -> Verdict:
    """Both failures exhibit the same radius."""
    r1, r2 = thin.witness["radius"], osc.witness["radius"]
    if r1 != r2:
        return Verdict.fails({"thin": r1, "oscillating": r2})
    return Verdict.holds({"radius": r1, "function": osc.witness["function"]})


def suite_thin(b: SetBallean, model: dict, point_ideal_model: bool) -> SuiteReport:
    """Equivalent characterisations of thinness, checked as verdict consistency.

    ``point_ideal_model`` says which of the two ideal balleans ``b`` is; the
    former is claimed thin, the latter never thin.
    """
    rep = SuiteReport("thin", model)
    h = b.horizon
    connected = is_connected(b)
    unbounded = is_bounded(b, b.points).failed
    hyp = connected and unbounded
    rep.notes.append(f"connected={str(connected).lower()} unbounded={str(unbounded).lower()}")
    if not hyp:
        rep.notes.append("model is outside the connected unbounded hypothesis")
    expect = HOLDS if point_ideal_model else FAILS

    rep.add("axioms", "the ball structure satisfies containment, symmetry and multiplicativity",
            verify_axioms(b))
    items = {
        "thin.i": ("the ballean is thin", is_thin(b)),
        "thin.iii": ("every non-thick subset is bounded", non_thick_bounded(b)),
        "thin.v": ("x -> X minus {x} is an asymorphism onto its image",
                   _tag(is_asymorphism(map_C(b)), h)),
        "thin.vi": ("every {0,1}-valued function is slowly oscillating", all_slowly_oscillating(b)),
    }
    for label, (claim, v) in items.items():
        rep.add(label, claim, v, expect, hyp)
    statuses = {label: v.failed for label, (_, v) in items.items()}
    if len(set(statuses.values())) == 1:
        consistency = Verdict.holds(horizon=h)
    else:
        consistency = Verdict.fails({k: ("fails" if f else "holds") for k, f in statuses.items()})
    rep.add("thin.consistency", "the listed characterisations agree", consistency, HOLDS, hyp)
    thin_v, osc_v = items["thin.i"][1], items["thin.vi"][1]
    if thin_v.failed and osc_v.failed:
        rep.add("thin.commonWitness", "thinness and oscillation fail at one radius",
                _common_radius(thin_v, osc_v), HOLDS, hyp)
    rep.add("thin.lemma", "C(Y) is bounded exactly when one radius enlarges every ball on Y",
            lemma_thin(b), HOLDS, hyp)
    rep.add("thin.cBallIdentity", "C carries each ball onto the hyperball around C(x) within C(X)",
            _tag(c_ball_identity(b), h), HOLDS if point_ideal_model else None, hyp)
    if h is None:
        _thin_finite_data(rep, b, hyp, point_ideal_model)
    return rep


def _thin_finite_data(rep: SuiteReport, b: SetBallean, hyp: bool, point_ideal_model: bool):
    try:
        sat, fam = make_satellite(b)
        sat_v = Verdict.holds({"boundedFamily": fam.to_json()}) if same_balls(b, sat) \
            else Verdict.fails({"boundedFamily": fam.to_json()})
    except ImproperSatellite as e:
        sat_v = Verdict.fails({"reason": str(e)})
    rep.add("thin.ii", "the ballean coincides with its satellite", sat_v, None, hyp)
    exp = ExpBallean(b)
    meshy = [a for a in submasks(b.support) if a and is_thick(b, bits(a)).failed]
    bm = SubBallean(exp, meshy, name="meshy")
    n = len(components(bm))
    rep.add("thin.iv", "the hyperballean of non-empty non-thick sets is connected",
            Verdict.holds({"components": n}) if n == 1 else Verdict.fails({"components": n}),
            None, hyp)
    rep.add("thin.cbNotProper", "X minus A on bounded sets is not effectively proper",
            cb_properness_witness(b), HOLDS if point_ideal_model else None, False)


# dsc


def closed_form_agreement(ideal, closed: Callable, base: SetBallean) -> Verdict:
    """Closed-form hyperballs equal the defining comprehension for every centre and radius."""
    for k in base.radii:
        for a in ideal.ground.subsets():
            got, want = closed(ideal, a, k), exp_ball_generic(base, a, k)
            if got != want:
                return Verdict.fails({"A": bits(a), "K": bits(k), "closedForm": family(got),
                                      "generic": family(want)})
    return Verdict.holds()


def _cartesian_vs_iary(ideal) -> Verdict:
    for k in ideal.members:
        for a in ideal.ground.subsets():
            cart = cartesian_ball(ideal, a, k)
            if len(cart) != 1 << popcount(k):
                return Verdict.fails({"A": bits(a), "K": bits(k), "size": len(cart)})
            if a and exp_ball_iary(ideal, a, k) != cart - {0}:
                return Verdict.fails({"A": bits(a), "K": bits(k)})
    return Verdict.holds()


def _classes(parts) -> list:
    return [family(c) for c in parts]


def _membership_by_hat(ideal) -> Verdict:
    hat = ideal_hat(ideal)
    for a in ideal.ground.subsets():
        if ideal.contains(a) != (a & hat == 0):
            return Verdict.fails({"A": bits(a), "hat": bits(hat)})
    return Verdict.holds()


def suite_dsc(ideal, components_max: int = 4) -> SuiteReport:
    """Components of the hyperballeans against cosets of ``P(X)/I`` and ``2**iota``."""
    rep = SuiteReport("dsc", ideal.to_json())
    g = ideal.ground
    v = ideal_validate(ideal)
    if v.failed:
        rep.add("valid", "the description is an ideal", v)
        return rep
    # the isolated-points hypothesis: every singleton is in the ideal
    singletons = all(ideal.contains(1 << x) for x in range(g.size))
    if not singletons:
        rep.notes.append("some singleton is outside the ideal")
    if ideal.union == 0:
        rep.notes.append("the ideal has no non-empty member")
    cosets = quotient_cosets(ideal)
    q = len(cosets)
    hat = ideal_hat(ideal)
    rep.add("hatMembership", "A is in I exactly when A misses the fixed ultrafilter points",
            _membership_by_hat(ideal))
    rep.add("iota", "iota is the least number of maximal ideals meeting in I",
            agreement({"iota": (iota(ideal), iota_bruteforce(ideal))}))
    rep.add("cosetCount", "P(X)/I has 2**iota elements",
            agreement({"quotientVsCrt": (q, 1 << popcount(hat))}))
    maximal = popcount(hat) == 1
    rep.add("maximal", "the Cartesian ballean has two components exactly when I is maximal",
            agreement({"twoIffMaximal": (q == 2, maximal)}))
    if g.size > components_max:
        rep.notes.append(f"component checks skipped above {components_max} points")
        return rep

    base_p, base_a = point_ideal(ideal), iary(ideal)
    rep.add("closedForm.pointIdeal", "closed-form hyperballs over the point-ideal ballean",
            closed_form_agreement(ideal, exp_ball_point_ideal, base_p))
    rep.add("closedForm.iary", "closed-form hyperballs over the I-ary ballean",
            closed_form_agreement(ideal, exp_ball_iary, base_a))
    rep.add("closedForm.cartesian", "Cartesian balls have 2**|K| members and minus the empty "
            "set are the I-ary hyperballs", _cartesian_vs_iary(ideal))

    comp = {f: components_exp(ideal, f) for f in ("cartesian", "iary", "pointIdeal",
                                                  "expStarIary", "expStarPointIdeal")}
    cart_classes = [tuple(c) for c in cosets.classes]
    rep.add("dsc.i", "non-empty sets share an I-ary hyperballean component iff Y ^ Z is in I",
            agreement({"components": (_classes(comp["iary"]),
                                      _classes(close_classes(ideal, "iary")))}))
    rep.add("dsc.ii", "sets share a Cartesian component iff Y ^ Z is in I",
            agreement({"closeness": (_classes(comp["cartesian"]),
                                     _classes(close_classes(ideal, "cartesian"))),
                       "cosets": (_classes(comp["cartesian"]), _classes(sorted(cart_classes)))}))
    rep.add("dsc.iii", "both hyperballeans have the same components",
            agreement({"components": (_classes(comp["pointIdeal"]), _classes(comp["iary"]))}),
            HOLDS, singletons)
    n_cart = len(comp["cartesian"])
    rep.add("dsc.iv.iary", "the I-ary hyperballean has one more component than the Cartesian",
            agreement({"count": (len(comp["iary"]), n_cart + 1)}), HOLDS, ideal.union != 0)
    rep.add("dsc.iv.pointIdeal", "the point-ideal hyperballean has one more component than "
            "the Cartesian", agreement({"count": (len(comp["pointIdeal"]), n_cart + 1)}),
            HOLDS, singletons)
    rep.add("emptySetComponent", "removing the empty set removes exactly one component",
            agreement({"iary": (len(comp["iary"]), len(comp["expStarIary"]) + 1),
                       "pointIdeal": (len(comp["pointIdeal"]),
                                      len(comp["expStarPointIdeal"]) + 1)}))
    rep.add("methods", "components, cosets and 2**iota count the Cartesian components alike",
            agreement({"quotient": (n_cart, dsc(ideal, "cartesian", "quotient")),
                       "crt": (n_cart, dsc(ideal, "cartesian", "crt"))}))
    return rep


# maps


def ring_maps(ideal, flavor: str = "cartesian") -> dict[str, BalleanMap]:
    """Addition (symmetric difference) and multiplication (intersection) on the product ballean."""
    c = hyperballean(ideal, flavor)
    n = ideal.ground.size
    prod = ProductBallean(c, c, n)
    lo = (1 << n) - 1
    return {"sum": BalleanMap(prod, c, lambda p: (p & lo) ^ (p >> n), "sum"),
            "product": BalleanMap(prod, c, lambda p: (p & lo) & (p >> n), "product")}


def _status_triple(v_base: Verdict, lifted: Callable) -> tuple[str, str]:
    """Statuses of a property for ``f`` and for its lift; an ill-defined lift counts as failure."""
    try:
        v = lifted()
    except UnboundedImage as e:
        v = Verdict.fails({"illDefined": str(e)})
    return ("fails" if v_base.failed else "holds", "fails" if v.failed else "holds")


def _lift_agreement(maps: dict, prop: Callable, lift: Callable) -> Verdict:
    pairs = {name: _status_triple(prop(m), lambda m=m: prop(lift(m))) for name, m in maps.items()}
    for name, (a, b) in pairs.items():
        if a != b:
            return Verdict.fails({"map": name, "base": a, "lifted": b})
    return Verdict.holds({name: a for name, (a, _) in pairs.items()})


def default_point(ideal) -> int:
    return lowest(ideal.union) if ideal.union else 0


def suite_maps(ideal, x: int | None = None) -> SuiteReport:
    """The holds/fails pattern claimed for the identity map, its lifts and its restrictions."""
    if x is None:
        x = default_point(ideal)
    model = dict(ideal.to_json(), x=x)
    rep = SuiteReport("maps", model)
    s = ideal.union
    nontrivial = s != 0
    singletons = all(ideal.contains(1 << y) for y in range(ideal.ground.size))
    at_x = bool(s >> x & 1)
    if not at_x:
        rep.notes.append(f"{x} is outside the union of the ideal")

    idx = map_id_point_to_iary(ideal)
    rep.add("idX.coarse", "id from the point-ideal to the I-ary ballean is coarse", is_coarse(idx))
    rep.add("idX.notProper", "that identity is not effectively proper",
            is_effectively_proper(idx), FAILS, nontrivial)

    pi, ia = point_ideal(ideal), iary(ideal)
    samples = {"pointToIary": idx, "iaryToPoint": identity(ia, pi, "idBack"),
               "pointToPoint": identity(pi, pi)}
    rep.add("morphisms.coarse.exp", "f is coarse iff its hyperspace lift is",
            _lift_agreement(samples, is_coarse, map_exp))
    rep.add("morphisms.coarse.flat", "f is coarse iff its bounded-set lift is defined and coarse",
            _lift_agreement(samples, is_coarse, map_flat), HOLDS, singletons)
    rep.add("morphisms.embedding.exp", "f is a coarse embedding iff its hyperspace lift is",
            _lift_agreement(samples, is_coarse_embedding, map_exp))
    rep.add("morphisms.embedding.flat", "f is a coarse embedding iff its bounded-set lift is "
            "defined and one", _lift_agreement(samples, is_coarse_embedding, map_flat),
            HOLDS, singletons)

    pairs = {"expId": ("exp of the point-ideal ballean to exp of the I-ary ballean",
                        map_j(ideal), nontrivial),
             "expToCartesian": ("exp of the I-ary ballean to the Cartesian ballean",
                         map_j_cartesian(ideal), nontrivial),
             "flatId": ("bounded sets of the point-ideal ballean to those of the I-ary one",
                          map_i_flat(ideal), singletons)}
    for label, (what, m, hyp) in pairs.items():
        rep.add(f"{label}.coarse", f"the identity from {what} is coarse", is_coarse(m))
        rep.add(f"{label}.notAsymorphism", f"the identity from {what} is not an asymorphism",
                is_asymorphism(m), FAILS, hyp)

    jx = map_jx(ideal, x)
    rep.add("containsX.asymorphism", "the identity restricted to sets containing x is an asymorphism",
            is_asymorphism(jx), HOLDS, at_x)
    psi = {a: a for a in ideal_support(ideal, x)}
    rep.add("containsX.transport", "hyperballs around sets containing x agree in both flavors",
            check_remark_asy(jx, psi) if psi else Verdict.fails({"radii": []}), HOLDS, at_x)
    rep.add("containsX.cartesian", "sets containing x are coarsely equivalent to the Cartesian ballean",
            is_coarse_equivalence(map_jx_cartesian(ideal, x)), HOLDS, at_x)
    if at_x:
        rep.add("memberX.asymorphism", "the identity on ideal members containing x is an asymorphism",
                is_asymorphism(map_jx_flat(ideal, x)), HOLDS, at_x)
        rep.add("memberX.macrocube", "ideal members containing x are coarsely equivalent to the "
                "macrocube", is_coarse_equivalence(map_jx_macrocube(ideal, x)), HOLDS, at_x)

    ring = ring_maps(ideal)
    rep.add("ring.sum", "symmetric difference is coarse on the Cartesian ballean",
            is_coarse(ring["sum"]))
    rep.add("ring.product", "intersection is coarse on the Cartesian ballean",
            is_coarse(ring["product"]))
    exp_ring = ring_maps(ideal, "iary")
    both = conjunction({"sum": is_coarse(exp_ring["sum"]),
                        "product": is_coarse(exp_ring["product"])})
    rep.add("ring.expIary", "the ring operations are not both coarse on exp of the I-ary "
            "ballean", both, FAILS, singletons)
    return rep


# kcubes


def suite_kcubes(horizon: int, x: int = 1, window: int | None = None) -> SuiteReport:
    """Windowed checks of the odd-ordinal embedding and of the copies of the Cartesian ballean.

    The set-level identities run on all of ``P([0, horizon))``; the map-level
    checks run on the smaller ``window`` (default ``x + 5``, capped by the
    horizon) because they enumerate the hyperballeans.
    """
    if window is None:
        window = min(horizon, x + 5)
    rep = SuiteReport("kcubes", {"kappa": "omega", "horizon": horizon, "x": x,
                                 "window": window})
    rep.add("kcubes.ii.identity", "f carries point-ideal hyperballs onto I-ary hyperballs "
            "within the image", check_embedding_identity(horizon))
    rep.add("kcubes.ii.step", "below A | [0,a] a non-empty Z differs from A minus [0,a] "
            "iff 2 min Z <= 2a + 1", check_parity_lemma(horizon))
    rep.add("kcubes.ii.shape", "every non-empty image has exactly one even element, its minimum",
            check_image_shape(horizon))
    small = min(horizon, 5)
    rep.add("kcubes.ii.transport", "f is an asymorphic embedding with radii [0,a] -> [0,2a+1]",
            check_remark_asy(map_kcube_omega(small), kcube_psi(small)))
    fm = map_kcube_i(x, window)
    rep.add("kcubes.i.identity", "X -> g(X) | {x} carries Cartesian balls onto hyperballs "
            "within the sets with minimum x", check_cube_identity(fm))
    rep.add("kcubes.i.asymorphism", "that map is an asymorphism onto the sets with minimum x",
            _tag(is_asymorphism(fm), window))
    rep.add("kcubes.i.close", "the copies for x < y are close", check_copies_close(window))
    rep.add("kcubes.i.partition", "the copies partition the non-empty sets",
            check_copies_partition(window))
    rep.add("kcubes.cor", "non-empty finite sets go to non-empty finite members of the image",
            check_finite_images(horizon))
    return rep


# bulk


def principal_ideals(max_n: int):
    """Every valid ideal on grounds of 1..max_n points, in normal form ``P(S)`` with ``S != X``."""
    for n in range(1, max_n + 1):
        g = GroundSet.finite(n)
        for s in range(g.full):
            yield Ideal(g, "principal", s)


def _reports_for(name: str, ideal: Ideal) -> list[SuiteReport]:
    if name == "dsc":
        return [suite_dsc(ideal)]
    if name == "maps":
        return [suite_maps(ideal, x) for x in range(ideal.ground.size)]
    if name == "thin":
        return [suite_thin(point_ideal(ideal), model_json("pointIdeal", ideal), True),
                suite_thin(iary(ideal), model_json("iary", ideal), False)]
    raise ValueError(f"suite {name!r} has no bulk mode")


def _bulk_one(args) -> list[dict]:
    name, ideal_json = args
    return [r.to_json() for r in _reports_for(name, Ideal.from_json(ideal_json))]


def model_json(kind: str, ideal: Ideal) -> dict:
    return {"ballean": {kind: ideal.to_json()}}


def bulk(name: str, max_n: int, jobs: int = 1) -> dict:
    """Run a suite over every valid ideal up to ``max_n`` points; output is independent of ``jobs``."""
    tasks = [(name, i.to_json()) for i in principal_ideals(max_n)]
    if jobs > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            results = list(pool.map(_bulk_one, tasks))
    else:
        results = [_bulk_one(t) for t in tasks]
    reports = [r for rs in results for r in rs]
    mixed = [{"model": r["model"], "disagreements": [c["label"] for c in r["checks"]
                                                     if c["inHypothesis"] and c["agrees"] is False]}
             for r in reports if r["overall"] == MIXED]
    outside = sorted({label for r in reports for label in r["outOfHypothesisDisagreements"]})
    return {"suite": name, "bulk": max_n, "reports": len(reports), "mixed": mixed,
            "outOfHypothesisDisagreements": outside,
            "overall": MIXED if mixed else HOLDS}

"""Seeded formula mutations and a harness that checks the suites catch each one.

A mutation replaces one function everywhere the package has bound it. It
counts as detected when some suite gains an in-hypothesis disagreement that
the unmutated code does not have, or when a suite crashes.
"""

from __future__ import annotations

import sys
from contextlib import contextmanager
from dataclasses import dataclass
from typing import Callable

from . import core, hyper, ideals, kcubes
from .core import ContractViolation, iary, point_ideal
from .ideals import Ideal
from .subsets import lowest, submasks


@dataclass(frozen=True)
class Mutation:
    name: str
    target: str
    description: str
    replacement: Callable


def _strict_to_weak(ideal, a, k):
    if not ideal.contains(k):
        raise ContractViolation("radius outside the ideal")
    if a & k == 0:
        return frozenset([a])
    return frozenset(a & ~k | y for y in submasks(k))


def _keep_empty(ideal, a, k):
    if not ideal.contains(k):
        raise ContractViolation("radius outside the ideal")
    if a == 0:
        return frozenset([0])
    return frozenset(a & ~k | y for y in submasks(k))


def _asymmetric_ball(ideal, x, a):
    return a | 1 << x


def _no_centre(ideal, x, a):
    return a if a >> x & 1 else 0


def _cartesian_upper_a(ideal, a, k):
    return frozenset(a & ~k | y for y in submasks(a & k))


def _union_closeness(ideal, y, z, flavor="cartesian"):
    if flavor != "cartesian" and (y == 0 or z == 0):
        if y == z:
            return True
        raise hyper.EmptySetFlavorMismatch("empty set")
    return ideal.contains(y | z)


def _hat_complement(ideal):
    return sum(1 << x for x in range(ideal.ground.size) if ideal.contains(1 << x))


def _extra_point_shifted(m):
    if m == 0:
        return 0
    return kcubes.spread_odd(m) | 1 << kcubes.phi(lowest(m)) + 1


MUTATIONS = (
    Mutation("strictToWeak", "exp_ball_point_ideal",
             "point-ideal hyperball allows Y = empty (proper subset relaxed)", _strict_to_weak),
    Mutation("keepEmpty", "exp_ball_iary", "I-ary hyperball keeps Z = empty", _keep_empty),
    Mutation("asymmetricBall", "ball_point_ideal",
             "point-ideal ball adds the radius around every centre", _asymmetric_ball),
    Mutation("dropCentre", "ball_point_ideal", "point-ideal ball omits its centre", _no_centre),
    Mutation("cartesianBounds", "cartesian_ball",
             "Cartesian ball bounded above by A instead of A | K", _cartesian_upper_a),
    Mutation("unionCloseness", "are_close", "closeness tests Y | Z instead of Y ^ Z",
             _union_closeness),
    Mutation("hatComplement", "ideal_hat", "fixed ultrafilter points taken as {x} in I",
             _hat_complement),
    Mutation("extraPointShift", "kcube_f", "extra point of f placed at 2 min F + 2",
             _extra_point_shifted),
)

_MODULES = ("ballean.core", "ballean.hyper", "ballean.ideals", "ballean.maps",
            "ballean.kcubes", "ballean.suites")
_HOMES = {"exp_ball_point_ideal": hyper, "exp_ball_iary": hyper, "ball_point_ideal": core,
          "cartesian_ball": hyper, "are_close": hyper, "ideal_hat": ideals, "kcube_f": kcubes}


def _clear_caches():
    point_ideal.cache_clear()
    iary.cache_clear()
    hyper.hyperballean.cache_clear()


@contextmanager
def injected(m: Mutation):
    original = getattr(_HOMES[m.target], m.target)
    patched = []
    for name in _MODULES:
        mod = sys.modules.get(name)
        if mod is not None and getattr(mod, m.target, None) is original:
            setattr(mod, m.target, m.replacement)
            patched.append(mod)
    _clear_caches()
    try:
        yield
    finally:
        for mod in patched:
            setattr(mod, m.target, original)
        _clear_caches()


def detection_runs() -> dict[str, Callable]:
    """The fixed small models each suite is run on."""
    from .suites import model_json, suite_dsc, suite_kcubes, suite_maps, suite_thin
    small = Ideal.principal(4, [0, 1])
    window = Ideal.frechet(10)
    return {
        "dsc": lambda: [suite_dsc(small), suite_dsc(Ideal.principal(3, [0]))],
        "thin": lambda: [suite_thin(point_ideal(window), model_json("pointIdeal", window), True),
                         suite_thin(iary(window), model_json("iary", window), False)],
        "maps": lambda: [suite_maps(small, 0)],
        "kcubes": lambda: [suite_kcubes(6, 1)],
    }


def _signature(run: Callable) -> set:
    try:
        return {(r.suite, str(r.model), c.label) for r in run() for c in r.disagreements}
    except Exception as e:  # a crash under mutation is a detection
        return {("crash", type(e).__name__)}


def run_faults(suites: tuple[str, ...] | None = None) -> dict:
    """Detection table: for each mutation, the suites whose disagreements changed."""
    runs = detection_runs()
    if suites is not None:
        runs = {k: v for k, v in runs.items() if k in suites}
    baseline = {name: _signature(run) for name, run in runs.items()}
    table = []
    for m in MUTATIONS:
        with injected(m):
            found = {}
            for name, run in runs.items():
                new = sorted(map(list, _signature(run) - baseline[name]))
                if new:
                    found[name] = new
        table.append({"mutation": m.name, "target": m.target, "description": m.description,
                      "detectedBy": sorted(found), "evidence": found})
    missed = [t["mutation"] for t in table if not t["detectedBy"]]
    return {"mutations": table, "missed": missed, "detectionRate": 1 - len(missed) / len(table)}

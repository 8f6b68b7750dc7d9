"""JSON descriptions of ideals and balleans.

A ballean description is ``{"ballean": {kind: value}}`` with kind one of
``pointIdeal``, ``iary`` (value: an ideal), ``cartesian``, ``macrocube``
(value: an ideal), ``exp``, ``expStar``, ``flat`` (value: a ``pointIdeal``
or ``iary`` description) and ``sub`` (value: ``{"of": <ballean>,
"support": [...]}``). Points of set-balleans are integers, points of
hyperballeans are sorted element lists.
"""

from __future__ import annotations

from .core import Ballean, SetBallean, iary, make_subballean, point_ideal
from .hyper import ExpBallean, hyperballean
from .ideals import Ideal
from .subsets import GroundSet, mask

_HYPER = {("exp", "pointIdeal"): "pointIdeal", ("exp", "iary"): "iary",
          ("expStar", "pointIdeal"): "expStarPointIdeal", ("expStar", "iary"): "expStarIary",
          ("flat", "pointIdeal"): "flatPointIdeal", ("flat", "iary"): "flatIary"}


def _one_key(obj, what: str):
    if not isinstance(obj, dict) or len(obj) != 1:
        raise ValueError(f"{what} must be an object with exactly one key: {obj!r}")
    return next(iter(obj.items()))


def parse_ideal(obj, ground: GroundSet | None = None) -> Ideal:
    """An ideal from ``{"ground": .., "ideal": ..}`` or from a bare description plus ``ground``."""
    if not isinstance(obj, dict):
        raise ValueError(f"ideal description must be an object: {obj!r}")
    if "ground" not in obj and ground is None and "frechet" in obj.get("ideal", obj):
        raise ValueError("a Frechet ideal needs a horizon")
    return Ideal.from_json(obj, ground)


def point_from_json(b: Ballean, p):
    if isinstance(b, SetBallean):
        if not isinstance(p, int):
            raise ValueError(f"points of {b.name} are integers, got {p!r}")
        return p
    if not isinstance(p, list) or p != sorted(set(p)):
        raise ValueError(f"points of {b.name} are sorted element lists, got {p!r}")
    return mask(p)


def parse_ballean(obj, ground: GroundSet | None = None) -> tuple[Ballean, dict]:
    """The ballean and its canonical description (which re-parses to an equal model)."""
    if isinstance(obj, dict) and "ballean" in obj:
        obj = obj["ballean"]
    kind, value = _one_key(obj, "ballean description")
    if kind in ("pointIdeal", "iary", "cartesian", "macrocube"):
        ideal = parse_ideal(value, ground)
        canon = {kind: ideal.to_json()}
        if kind == "pointIdeal":
            b = point_ideal(ideal)
        elif kind == "iary":
            b = iary(ideal)
        else:
            b = hyperballean(ideal, kind)
        return b, {"ballean": canon}
    if kind in ("exp", "expStar", "flat"):
        inner, inner_canon = parse_ballean(value, ground)
        base_kind = next(iter(inner_canon["ballean"]))
        flavor = _HYPER.get((kind, base_kind))
        if flavor is not None:
            b = hyperballean(inner.ideal, flavor)
        elif kind == "exp" and isinstance(inner, SetBallean):
            b = ExpBallean(inner)
        else:
            raise ValueError(f"{kind} of a {base_kind} ballean is not supported")
        return b, {"ballean": {kind: inner_canon["ballean"]}}
    if kind == "sub":
        if not isinstance(value, dict) or set(value) != {"of", "support"}:
            raise ValueError("sub needs exactly the keys 'of' and 'support'")
        base, base_canon = parse_ballean(value["of"], ground)
        pts = [point_from_json(base, p) for p in value["support"]]
        missing = set(pts) - base.point_set
        if missing:
            raise ValueError(f"support points outside the base ballean: "
                             f"{sorted(base.show_point(p) for p in missing)}")
        b = make_subballean(base, pts)
        support = [base.show_point(p) for p in sorted(set(pts))]
        return b, {"ballean": {"sub": {"of": base_canon, "support": support}}}
    raise ValueError(f"unknown ballean kind {kind!r}")

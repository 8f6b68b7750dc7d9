"""Command-line front end. Every verb prints one JSON object on standard output.

Exit codes:
    0: computed, and every verdict holds (or the suite is consistent)
    1: a verdict fails, or a suite reports in-hypothesis disagreements
    2: malformed input; the JSON object is ``{"error": ..., "message": ...}``

Usage text (``--help``) goes to standard error so standard output stays JSON.
"""

from __future__ import annotations

import argparse
import json
import sys

from .core import ContractViolation, iary, point_ideal
from .hyper import (EXP_FLAVORS, STAR_FLAVORS, EmptySetFlavorMismatch, components,
                    dsc, exp_ball_generic, family, hyperballean)
from .ideals import InvalidIdeal, MethodUnavailable, ideal_validate
from .kcubes import WindowTooSmall, map_kcube_i, map_kcube_omega
from .maps import (PROPERTIES, UnboundedImage, map_C, map_CB, map_i_flat, map_id_point_to_iary,
                   map_j, map_j_cartesian, map_jx, map_jx_cartesian, map_jx_flat,
                   map_jx_macrocube)
from .models import parse_ballean, parse_ideal, point_from_json
from .subsets import GroundSet, bits, mask

INPUT_ERRORS = (ValueError, KeyError, TypeError, json.JSONDecodeError, ContractViolation,
                InvalidIdeal, MethodUnavailable, EmptySetFlavorMismatch, UnboundedImage,
                WindowTooSmall)


class InputError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise InputError(message)

    def print_help(self, file=None):
        super().print_help(sys.stderr)


def _json_arg(text: str):
    try:
        return json.loads(text)
    except json.JSONDecodeError as e:
        raise InputError(f"not valid JSON: {text!r} ({e.msg})") from None


def _ground(args) -> GroundSet | None:
    if args.ground is not None and args.horizon is not None:
        raise InputError("give --ground or --horizon, not both")
    if args.ground is not None:
        return GroundSet.finite(args.ground)
    if args.horizon is not None:
        return GroundSet.naturals(args.horizon)
    return None


def _ideal(args, text=None):
    return parse_ideal(_json_arg(text if text is not None else args.ideal), _ground(args))


def _set(obj) -> int:
    if not isinstance(obj, list) or not all(isinstance(v, int) for v in obj) \
            or obj != sorted(set(obj)) or (obj and obj[0] < 0):
        raise InputError(f"expected a sorted list of distinct non-negative integers: {obj!r}")
    return mask(obj)


# verbs


def cmd_validate(args) -> tuple[dict, int]:
    ideal = _ideal(args, args.model)
    v = ideal_validate(ideal)
    return {"model": ideal.to_json(), "verdict": v.to_json()}, int(v.failed)


def cmd_ball(args) -> tuple[dict, int]:
    b, canon = parse_ballean(_json_arg(args.model), _ground(args))
    centre = point_from_json(b, _json_arg(args.center))
    if centre not in b.point_set:
        raise InputError(f"centre {args.center} is not a point of the ballean")
    radius = _set(_json_arg(args.radius))
    members = b.show_set(b.ball(centre, radius))
    return {"model": canon, "center": b.show_point(centre), "radius": bits(radius),
            "members": members}, 0


def cmd_expball(args) -> tuple[dict, int]:
    ideal = _ideal(args)
    a, k = _set(_json_arg(args.center)), _set(_json_arg(args.radius))
    ideal.ground.check(a)
    ideal.ground.check(k)
    if args.flavor == "genericPointIdeal":
        members = exp_ball_generic(point_ideal(ideal), a, k)
    elif args.flavor == "genericIary":
        members = exp_ball_generic(iary(ideal), a, k)
    else:
        h = hyperballean(ideal, args.flavor)
        if a not in h.point_set:
            raise InputError(f"centre {bits(a)} is not a point of {args.flavor}")
        members = h.ball(a, k)
    return {"expBall": {"flavor": args.flavor, "ideal": ideal.to_json(), "center": bits(a),
                        "radius": bits(k)}, "members": family(members)}, 0


def cmd_components(args) -> tuple[dict, int]:
    b, canon = parse_ballean(_json_arg(args.model), _ground(args))
    if b.horizon is not None:
        raise MethodUnavailable("components are computed on finite models only")
    parts = components(b)
    return {"model": canon, "count": len(parts),
            "components": [b.show_set(c) for c in parts]}, 0


def cmd_dsc(args) -> tuple[dict, int]:
    ideal = _ideal(args)
    v = ideal_validate(ideal)
    if v.failed:
        raise InvalidIdeal(v)
    n = dsc(ideal, args.flavor, args.method)
    return {"dsc": {"flavor": args.flavor, "ideal": ideal.to_json(), "method": args.method},
            "count": n}, 0


MAPS = {
    "idX": lambda i, a: map_id_point_to_iary(i),
    "j": lambda i, a: map_j(i),
    "jCartesian": lambda i, a: map_j_cartesian(i),
    "i": lambda i, a: map_i_flat(i),
    "jx": lambda i, a: map_jx(i, a.x),
    "jxCartesian": lambda i, a: map_jx_cartesian(i, a.x),
    "jxFlat": lambda i, a: map_jx_flat(i, a.x),
    "jxMacrocube": lambda i, a: map_jx_macrocube(i, a.x),
    "C": lambda i, a: map_C(point_ideal(i)),
    "CIary": lambda i, a: map_C(iary(i)),
    "CB": lambda i, a: map_CB(point_ideal(i)),
}
KCUBE_MAPS = ("kcubeOmega", "kcubeI")


def cmd_checkmap(args) -> tuple[dict, int]:
    props = [p for p in args.props.split(",") if p]
    unknown = [p for p in props if p not in PROPERTIES]
    if unknown or not props:
        raise InputError(f"unknown properties {unknown}; choose from {sorted(PROPERTIES)}")
    if args.map in KCUBE_MAPS:
        if args.horizon is None:
            raise InputError(f"{args.map} needs --horizon")
        if args.map == "kcubeOmega":
            m = map_kcube_omega(args.horizon)
        else:
            g = _json_arg(args.g) if args.g is not None else None
            m = map_kcube_i(args.x if args.x is not None else 1, args.horizon, g)
        model = {"kappa": "omega", "horizon": args.horizon, "x": args.x}
    else:
        if args.ideal is None:
            raise InputError(f"{args.map} needs --ideal")
        ideal = _ideal(args)
        v = ideal_validate(ideal)
        if v.failed:
            raise InvalidIdeal(v)
        if args.map.startswith("jx") and args.x is None:
            raise InputError(f"{args.map} needs --x")
        m = MAPS[args.map](ideal, args)
        model = dict(ideal.to_json(), x=args.x)
    verdicts = {p: PROPERTIES[p](m).to_json() for p in props}
    failed = any(v["status"] == "fails" for v in verdicts.values())
    return {"map": args.map, "model": model, "verdicts": verdicts}, int(failed)


def cmd_suite(args) -> tuple[dict, int]:
    from .faults import run_faults
    from .suites import MIXED, bulk, suite_dsc, suite_kcubes, suite_maps, suite_thin

    if args.name == "faults":
        out = run_faults()
        return out, int(bool(out["missed"]))
    if args.bulk is not None:
        if args.name == "kcubes":
            raise InputError("kcubes has no bulk mode")
        out = bulk(args.name, args.bulk, args.jobs)
        return out, int(out["overall"] == MIXED)
    if args.name == "kcubes":
        if args.horizon is None:
            raise InputError("kcubes needs --horizon")
        rep = suite_kcubes(args.horizon, args.x if args.x is not None else 1, args.window)
    else:
        if args.model is None:
            raise InputError(f"suite {args.name} needs --model")
        obj = _json_arg(args.model)
        if args.name == "thin":
            b, canon = parse_ballean(obj, _ground(args))
            kind = next(iter(canon["ballean"]))
            if kind not in ("pointIdeal", "iary"):
                raise InputError("the thin suite takes a pointIdeal or iary ballean")
            rep = suite_thin(b, canon, kind == "pointIdeal")
        else:
            ideal = parse_ideal(obj, _ground(args))
            if not ideal.ground.is_finite:
                raise InputError(f"suite {args.name} needs a finite model")
            v = ideal_validate(ideal)
            if v.failed:
                raise InvalidIdeal(v)
            rep = suite_dsc(ideal) if args.name == "dsc" else suite_maps(ideal, args.x)
    out = rep.to_json()
    return out, int(out["overall"] == MIXED)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="ballean", description="Ideal balleans, hyperballeans and coarse maps.")
    sub = p.add_subparsers(dest="verb", required=True, parser_class=_Parser)

    def common(sp, ideal=False):
        sp.add_argument("--ground", type=int, help="finite ground {0..n-1}")
        sp.add_argument("--horizon", type=int, help="window [0,h) of the naturals")
        if ideal:
            sp.add_argument("--ideal", help="ideal JSON, bare or with its ground")

    sp = sub.add_parser("validate", help="check that a description is an ideal")
    sp.add_argument("--model", required=True, help="ideal JSON")
    common(sp)
    sp.set_defaults(run=cmd_validate)

    sp = sub.add_parser("ball", help="a ball of a described ballean")
    sp.add_argument("--model", required=True, help="ballean JSON")
    sp.add_argument("--center", required=True, help="point JSON")
    sp.add_argument("--radius", required=True, help="radius JSON (element list)")
    common(sp)
    sp.set_defaults(run=cmd_ball)

    sp = sub.add_parser("expball", help="a hyperball by closed form or by enumeration")
    sp.add_argument("--flavor", required=True,
                    choices=sorted(set(EXP_FLAVORS + STAR_FLAVORS) | {"cartesian"}))
    sp.add_argument("--center", required=True)
    sp.add_argument("--radius", required=True)
    common(sp, ideal=True)
    sp.set_defaults(run=cmd_expball)

    sp = sub.add_parser("components", help="connected components of a finite ballean")
    sp.add_argument("--model", required=True, help="ballean JSON")
    common(sp)
    sp.set_defaults(run=cmd_components)

    sp = sub.add_parser("dsc", help="number of components of a hyperballean")
    sp.add_argument("--flavor", required=True,
                    choices=sorted(("cartesian",) + EXP_FLAVORS + STAR_FLAVORS))
    sp.add_argument("--method", default="components", choices=("components", "quotient", "crt"))
    common(sp, ideal=True)
    sp.set_defaults(run=cmd_dsc)

    sp = sub.add_parser("checkmap", help="morphism properties of a named map")
    sp.add_argument("--map", required=True, choices=sorted(MAPS) + list(KCUBE_MAPS))
    sp.add_argument("--props", required=True, help=f"comma list of {','.join(PROPERTIES)}")
    sp.add_argument("--x", type=int, help="point for the restricted maps")
    sp.add_argument("--g", help="bijection for kcubeI as a JSON list (default: shift)")
    common(sp, ideal=True)
    sp.set_defaults(run=cmd_checkmap)

    sp = sub.add_parser("suite", help="run a property suite")
    sp.add_argument("--name", required=True, choices=("thin", "dsc", "maps", "kcubes", "faults"))
    sp.add_argument("--model", help="ideal JSON (dsc, maps) or ballean JSON (thin)")
    sp.add_argument("--x", type=int)
    sp.add_argument("--window", type=int, help="map-level window for kcubes")
    sp.add_argument("--bulk", type=int, metavar="MAXN", help="all valid ideals up to MAXN points")
    sp.add_argument("--jobs", type=int, default=1)
    common(sp)
    sp.set_defaults(run=cmd_suite)
    return p


def run(argv: list[str] | None = None) -> tuple[dict, int]:
    try:
        args = build_parser().parse_args(argv)
        return args.run(args)
    except InputError as e:
        return {"error": "usage", "message": str(e)}, 2
    except INPUT_ERRORS as e:
        return {"error": type(e).__name__, "message": str(e)}, 2


def main(argv: list[str] | None = None) -> int:
    try:
        out, code = run(argv)
    except SystemExit as e:  # --help
        return int(e.code or 0)
    print(json.dumps(out, sort_keys=True))
    return code


if __name__ == "__main__":
    sys.exit(main())

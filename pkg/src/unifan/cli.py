"""Command-line surface: fan file format, analysis reports, family builders."""

from __future__ import annotations

import argparse
import json
import random
import sys

from . import __version__
from .coxspace import apply_root, apply_torus, random_rational, random_stratum_point
from .families import InvalidSpec, NotApplicable, build, cross_check, parse_family
from .fan import Fan, FanError, is_complete, validate_fan
from .pipeline import FanAnalysis, analyze_fan

_JSON_SAFE = 2**53 - 1


class FanFileError(Exception):
    pass


def load_fan_file(path: str):
    try:
        with open(path, "r", encoding="utf-8") as fh:
            data = json.load(fh)
    except OSError as exc:
        raise FanFileError(f"cannot read {path}: {exc}") from None
    except json.JSONDecodeError as exc:
        raise FanFileError(f"{path} is not valid JSON: {exc}") from None
    if not isinstance(data, dict):
        raise FanFileError("fan file must be a JSON object")
    for key in ("dim", "rays", "max_cones"):
        if key not in data:
            raise FanFileError(f"fan file is missing {key!r}")
    dim = data["dim"]
    rays = data["rays"]
    max_cones = data["max_cones"]
    if not isinstance(dim, int) or isinstance(dim, bool):
        raise FanFileError("dim must be an integer")
    if not isinstance(rays, list) or not all(
        isinstance(r, list) and all(isinstance(x, int) for x in r) for r in rays
    ):
        raise FanFileError("rays must be a list of integer vectors")
    if not isinstance(max_cones, list) or not all(
        isinstance(c, list) and all(isinstance(i, int) for i in c) for c in max_cones
    ):
        raise FanFileError("max_cones must be a list of ray-index lists")
    return dim, rays, max_cones


def fan_file_payload(fan: Fan) -> dict:
    return {
        "dim": fan.dim,
        "rays": [list(v) for v in fan.ray_vectors()],
        "max_cones": [list(c.ray_indices) for c in fan.max_cones],
    }


def _jsonable(value):
    """Recursively prepare a report for JSON; integers beyond 2^53 - 1 are
    serialized as strings so consumers never lose precision."""
    if isinstance(value, bool) or value is None or isinstance(value, str):
        return value
    if isinstance(value, int):
        return value if abs(value) <= _JSON_SAFE else str(value)
    if isinstance(value, (list, tuple)):
        return [_jsonable(x) for x in value]
    if isinstance(value, dict):
        return {k: _jsonable(v) for k, v in value.items()}
    raise TypeError(f"cannot serialize {type(value)!r}")


def _verdict_payload(verdict) -> dict:
    return {
        "finite": verdict.finite,
        "orbit_count": verdict.orbit_count,
        "reason": verdict.reason,
        "witness_cone": list(verdict.witness_cone.ray_indices)
        if verdict.witness_cone is not None
        else None,
        "witness_irreducibles": [list(v) for v in verdict.witness_irreducibles]
        if verdict.witness_irreducibles is not None
        else None,
    }


def _oracle_check(analysis: FanAnalysis, seed: int, trials: int = 30) -> dict:
    """Seeded spot-check of the action simulator against the analysis.

    Verifies, on random stratum points, that unipotent root subgroups whose
    distinguished ray sits in the member-or-hat set act trivially and that
    the torus preserves zero patterns.
    """
    if analysis.bilateral is None or analysis.basics is None:
        return {"seed": seed, "trials": 0, "failures": 0}
    rng = random.Random(seed)
    in_u_roots = [r for r in analysis.roots if r.in_u]
    failures = 0
    for _ in range(trials):
        basic = rng.choice(analysis.basics)
        point = random_stratum_point(analysis.fan, basic, rng)
        frozen = set(basic.rays) | set(basic.hat)
        candidates = [r for r in in_u_roots if r.distinguished_ray in frozen]
        if candidates:
            root = rng.choice(candidates)
            moved = apply_root(point, root, random_rational(rng, nonzero=True))
            if moved.coords != point.coords:
                failures += 1
        torus = [random_rational(rng, nonzero=True) for _ in range(analysis.classes.k)]
        scaled = apply_torus(point, torus, analysis.classes)
        if scaled.zero_pattern() != point.zero_pattern():
            failures += 1
    return {"seed": seed, "trials": trials, "failures": failures}


def build_report(analysis: FanAnalysis, include_orbits, include_roots, check, seed):
    fan = analysis.fan
    report = {
        "tool": {"name": "unifan", "version": __version__},
        "fan": {
            **fan_file_payload(fan),
            "num_cones": len(fan.all_cones),
            "complete": is_complete(fan),
            "simplicial": True,
        },
        "class_group": {
            "free_rank": analysis.class_info.free_rank,
            "torsion_invariants": list(analysis.class_info.torsion_invariants),
        },
        "bilateral": None,
        "classes": None,
        "roots": {
            "total": len(analysis.roots),
            "semisimple": sum(1 for r in analysis.roots if r.semisimple),
            "unipotent": sum(1 for r in analysis.roots if not r.semisimple),
            "in_unipotent_group": sum(1 for r in analysis.roots if r.in_u)
            if analysis.bilateral is not None
            else None,
        },
        "v": None,
        "precedence": None,
        "verdict": _verdict_payload(analysis.verdict),
    }
    if analysis.bilateral is not None:
        report["bilateral"] = {
            "positive": list(analysis.bilateral.positive),
            "negative": list(analysis.bilateral.negative),
            "dual_basis": analysis.bilateral.dual_basis.to_rows(),
        }
        report["classes"] = [list(c) for c in analysis.classes.classes]
        report["v"] = list(analysis.choice.v)
        report["precedence"] = sorted(
            [list(p) for p in analysis.precedence.pairs]
        )
    if include_roots:
        report["roots"]["list"] = [
            {
                "e": list(r.e),
                "distinguished_ray": r.distinguished_ray,
                "kind": r.kind,
                "in_unipotent_group": r.in_u,
            }
            for r in analysis.roots
        ]
    if include_orbits and analysis.catalog is not None:
        report["orbits"] = {
            "dimension_semantics": "derived",
            "records": [
                {
                    "rays": list(rec.basic.rays),
                    "hat": list(rec.basic.hat),
                    "dimension": rec.dimension,
                    "t_orbit_cones": [list(c.ray_indices) for c in rec.t_orbit_cones],
                }
                for rec in analysis.catalog
            ],
        }
    if check:
        try:
            cc = cross_check(fan, analysis.verdict)
            report["cross_check"] = {
                "recognizers": list(cc.recognizers),
                "predictions": list(cc.predictions),
                "verdict_finite": cc.verdict_finite,
                "agree": cc.agree,
                "weights": list(cc.weights) if cc.weights is not None else None,
                "negative_patterns": [list(p) for p in cc.negative_patterns]
                if cc.negative_patterns is not None
                else None,
            }
        except NotApplicable as exc:
            report["cross_check"] = {"applicable": False, "message": str(exc)}
        report["oracle"] = _oracle_check(analysis, seed)
    return report


def render_text(report: dict) -> str:
    lines = []
    fan = report["fan"]
    lines.append(
        f"fan: dim {fan['dim']}, {len(fan['rays'])} rays, "
        f"{len(fan['max_cones'])} maximal cones, {fan['num_cones']} cones, "
        f"{'complete' if fan['complete'] else 'not complete'}"
    )
    cg = report["class_group"]
    torsion = (
        " + " + " + ".join(f"Z/{t}" for t in cg["torsion_invariants"])
        if cg["torsion_invariants"]
        else ""
    )
    lines.append(f"class group: Z^{cg['free_rank']}{torsion}")
    if report["bilateral"] is None:
        lines.append("bilateral structure: none (not radiant)")
    else:
        b = report["bilateral"]
        lines.append(
            f"bilateral: positive rays {b['positive']}, negative rays {b['negative']}"
        )
        lines.append(
            "classes: "
            + "; ".join(
                f"ray {i} -> {tuple(c)}" for i, c in enumerate(report["classes"])
            )
        )
    roots = report["roots"]
    in_u = roots["in_unipotent_group"]
    lines.append(
        f"roots: {roots['total']} total ({roots['semisimple']} semisimple, "
        f"{roots['unipotent']} unipotent)"
        + (f", {in_u} in the unipotent subgroup" if in_u is not None else "")
    )
    if report["v"] is not None:
        lines.append(f"v: {tuple(report['v'])}")
        pairs = ", ".join(f"{a} before {b}" for a, b in report["precedence"])
        lines.append(f"precedence: {pairs if pairs else '(empty)'}")
    verdict = report["verdict"]
    if verdict["finite"]:
        lines.append(f"verdict: FINITE, {verdict['orbit_count']} orbits")
    else:
        lines.append(f"verdict: INFINITE ({verdict['reason']})")
        if verdict["witness_cone"] is not None:
            lines.append(
                f"  witness cone: rays {verdict['witness_cone']}, "
                f"irreducibles {[tuple(v) for v in verdict['witness_irreducibles']]}"
            )
    if "orbits" in report:
        lines.append("orbit catalog (dimension is derived as dim - |hat|):")
        for rec in report["orbits"]["records"]:
            cones = ", ".join(str(tuple(c)) for c in rec["t_orbit_cones"])
            lines.append(
                f"  orbit dim {rec['dimension']}: rays {rec['rays']}, "
                f"hat {rec['hat']}, torus-orbit cones [{cones}]"
            )
    if "cross_check" in report:
        cc = report["cross_check"]
        if cc.get("applicable") is False:
            lines.append(f"cross-check: not applicable ({cc['message']})")
        else:
            status = "AGREE" if cc["agree"] else "DISAGREE"
            lines.append(
                f"cross-check: {status} (recognizers {cc['recognizers']}, "
                f"predictions {cc['predictions']})"
            )
    if "oracle" in report:
        o = report["oracle"]
        lines.append(
            f"oracle: seed {o['seed']}, {o['trials']} trials, {o['failures']} failures"
        )
    return "\n".join(lines) + "\n"


def _emit_error(exc: Exception) -> int:
    payload = {"error": {"kind": type(exc).__name__, "message": str(exc)}}
    print(json.dumps(payload))
    return 2


def cmd_analyze(args) -> int:
    if bool(args.path) == bool(args.family):
        print(
            json.dumps(
                {
                    "error": {
                        "kind": "UsageError",
                        "message": "provide exactly one of a fan file path or --family",
                    }
                }
            )
        )
        return 2
    try:
        if args.family:
            fan = build(parse_family(args.family))
        else:
            dim, rays, max_cones = load_fan_file(args.path)
            fan = validate_fan(dim, rays, max_cones, require_complete=True)
    except (FanFileError, FanError, InvalidSpec, ValueError) as exc:
        return _emit_error(exc)
    analysis = analyze_fan(fan)
    report = build_report(
        analysis,
        include_orbits=args.orbits,
        include_roots=args.roots,
        check=args.check,
        seed=args.seed,
    )
    if args.format == "json":
        print(json.dumps(_jsonable(report), indent=2))
    else:
        sys.stdout.write(render_text(report))
    return 0


def cmd_build(args) -> int:
    try:
        fan = build(parse_family(args.family))
    except (InvalidSpec, FanError, ValueError) as exc:
        return _emit_error(exc)
    payload = fan_file_payload(fan)
    try:
        with open(args.output, "w", encoding="utf-8") as fh:
            json.dump(payload, fh, indent=2)
            fh.write("\n")
    except OSError as exc:
        return _emit_error(FanFileError(str(exc)))
    print(f"wrote {args.output}")
    return 0


def make_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="unifan",
        description=(
            "Decide whether a maximal unipotent subgroup of the automorphism "
            "group of a complete simplicial toric variety acts with finitely "
            "many orbits, and enumerate the orbits when it does."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    analyze = sub.add_parser("analyze", help="analyze a fan file or a named family")
    analyze.add_argument("path", nargs="?", help="JSON fan file")
    analyze.add_argument(
        "--family", help="family spec: wps:1,1,2 | hirzebruch:d | p1xp1 | pn:n"
    )
    analyze.add_argument("--format", choices=["text", "json"], default="text")
    analyze.add_argument(
        "--orbits", action="store_true", help="include the orbit catalog"
    )
    analyze.add_argument("--roots", action="store_true", help="include the root list")
    analyze.add_argument(
        "--check", action="store_true", help="run the classification cross-check"
    )
    analyze.add_argument(
        "--seed", type=int, default=0, help="seed for the property-oracle spot checks"
    )
    analyze.set_defaults(func=cmd_analyze)

    builder = sub.add_parser("build", help="write the fan file of a named family")
    builder.add_argument("family", help="family spec, e.g. hirzebruch:2")
    builder.add_argument("-o", "--output", required=True, help="output path")
    builder.set_defaults(func=cmd_build)
    return parser


def main(argv=None) -> int:
    args = make_parser().parse_args(argv)
    return args.func(args)


def console_entry() -> None:
    raise SystemExit(main())

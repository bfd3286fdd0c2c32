"""``convexpos`` command-line front end.

Exit status: 0 on success, 1 when a verification fails, 2 on malformed
input.  Diagnostics go to stderr as one JSON object.
"""
from __future__ import annotations

import argparse
import json
import sys

from convexpos import io
from convexpos.cc.chirotope import Chirotope, chirotope_from_system, verify_cc_axioms
from convexpos.cc.wiring import WiringDiagram, double_cover, validate_wiring_diagram
from convexpos.cylinder.system import CurveSystem
from convexpos.errors import (
    AxiomViolation,
    ClusterOverlap,
    ConvexPosError,
    InvalidDiagram,
    InvalidSystem,
    NotGeneric,
    UnequalSizes,
    UnknownLabel,
)
from convexpos.generate import random_arrangement, random_points, random_wiring_diagram, rng_for
from convexpos.geometry.bodies import Arrangement
from convexpos.geometry.tangents import EPS, dualize


class VerificationFailed(Exception):
    pass


def _emit(obj, out) -> None:
    text = obj if isinstance(obj, str) else io.dumps(obj)
    if out:
        with open(out, "w") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _say(args, msg: str) -> None:
    # the summary goes to stderr when the result itself is on stdout
    print(msg, file=sys.stderr if not args.out else sys.stdout)


def _need_in(args):
    if not args.inp:
        raise io.MalformedInput("--in FILE is required")
    return io.load(args.inp)


def _as_system(obj, eps) -> CurveSystem:
    if isinstance(obj, CurveSystem):
        return obj
    if isinstance(obj, Arrangement):
        return dualize(obj, eps)
    if isinstance(obj, WiringDiagram):
        return double_cover(obj)
    raise io.MalformedInput(f"cannot build a curve system from {type(obj).__name__}")


def cmd_gen(args):
    rng = rng_for(args.seed, 0)
    n = args.n
    if args.kind == "points":
        obj = random_points(n, rng)
    elif args.kind == "polygons":
        from convexpos.geometry.perturb import perturb

        obj = perturb(random_arrangement(n, rng, point_prob=0.0), 1e-6, seed=args.seed)
    elif args.kind == "diagram":
        obj = random_wiring_diagram(n, rng)
    else:
        from convexpos.search.lower_bound import lower_bound_construction

        obj = lower_bound_construction(n)
    _emit(obj, args.out)
    _say(args, f"generated {args.kind} with {len(obj) if isinstance(obj, Arrangement) else obj.n} elements")


def cmd_dualize(args):
    arr = _need_in(args)
    if not isinstance(arr, Arrangement):
        raise io.MalformedInput("dualize expects an arrangement file")
    S = dualize(arr, args.tolerance)
    _emit(S, args.out)
    _say(args, f"{S.n} curves, {S.m} crossing events")


def cmd_reduce(args):
    from convexpos.cylinder.zones import non_orientable_triples, reduce_to_orientable

    S = _as_system(_need_in(args), args.tolerance)
    start = len(non_orientable_triples(S))
    T, log = reduce_to_orientable(S)
    _emit(T, args.out)
    if args.log:
        _emit({"flips": [r.to_json() for r in log]}, args.log)
    _say(args, f"non-orientable triples: {start} -> 0 in {len(log)} flips")
    for r in log:
        _say(args, f"  flip {list(r.triple)} top {r.top}: {r.non_orientable_before} -> {r.non_orientable_after}")


def cmd_chirotope(args):
    S = _as_system(_need_in(args), args.tolerance)
    chi = chirotope_from_system(S)
    _emit(chi, args.out)
    _say(args, f"chirotope on {chi.n} labels")


def cmd_search(args):
    obj = _need_in(args)
    if isinstance(obj, WiringDiagram):
        from convexpos.search.pipeline import es_pipeline

        cert = es_pipeline(obj, args.n)
        data = cert.to_json()
    else:
        from convexpos.search.brute import brute_force_max_independent

        best = brute_force_max_independent(_as_system(obj, args.tolerance))
        data = {"kind": "independent-set", "labels": list(best), "trace": [{"step": "brute", "size": len(best)}]}
    _emit(data, args.out)
    _say(args, f"{data['kind']} certificate of size {len(data['labels'])}: {data['labels']}")


def _verify_file(args):
    obj = _need_in(args)
    if isinstance(obj, WiringDiagram):
        rep = validate_wiring_diagram(obj)
        if not rep.valid:
            raise VerificationFailed("; ".join(rep.problems))
        return "valid wiring diagram"
    if isinstance(obj, CurveSystem):
        return f"valid curve system on {obj.n} curves"
    if isinstance(obj, Chirotope):
        rep = verify_cc_axioms(obj)
        if not rep.ok:
            raise VerificationFailed(f"{rep.count} axiom violations, first {rep.violations[:3]}")
        return "chirotope satisfies the CC axioms"
    if args.against is None:
        raise io.MalformedInput("certificates and clusterings need --against FILE")
    src = io.load(args.against)
    if isinstance(obj, dict):
        from convexpos.search.pipeline import SearchCertificate, validate_certificate

        if not isinstance(src, WiringDiagram):
            raise io.MalformedInput("certificates are checked against a wiring diagram")
        from convexpos.cc.wiring import evacuate_top_wire

        cert = SearchCertificate(obj["kind"], tuple(obj["labels"]), (), evacuate_top_wire(src))
        if not validate_certificate(cert, src):
            raise VerificationFailed(f"certificate {obj['labels']} does not validate")
        return "certificate validates"
    from convexpos.search.clustering import verify_clustering

    rep = verify_clustering(src, obj)
    if not rep.ok:
        raise VerificationFailed(f"transversal {list(rep.witness)} is not convexly independent")
    return f"clustering of size {rep.size} verified on {rep.checked} transversals"


def cmd_verify(args):
    if args.suite is None:
        _say(args, _verify_file(args))
        return
    from convexpos.suites import run_suite

    results = run_suite(args.suite, args.instances, args.seed, args.workers)
    bad = [r for r in results if not r.ok]
    report = {
        "suite": args.suite,
        "seed": args.seed,
        "instances": len(results),
        "failures": [{"instance": r.instance, "detail": r.detail} for r in bad],
    }
    if args.out:
        _emit(report, args.out)
    print(f"{args.suite}: {len(results) - len(bad)}/{len(results)} instances pass")
    if bad:
        raise VerificationFailed(f"{len(bad)} failing instances, first {bad[0].instance}: {bad[0].detail}")


def cmd_realize(args):
    from convexpos.geometry.realize import blaschke_margin, realize_wiring_diagram

    W = _need_in(args)
    if not isinstance(W, WiringDiagram):
        raise io.MalformedInput("realize expects a wiring diagram file")
    R = realize_wiring_diagram(W, grid_size=args.grid)
    margin = blaschke_margin(R)
    _emit(R, args.out)
    _say(args, f"realized {W.n} bodies on grid {R.grid}, curvature margin {margin:.6g}")
    if margin <= args.tolerance:
        raise VerificationFailed(f"curvature margin {margin} not above {args.tolerance}")


def cmd_render(args):
    from convexpos.render import render_diagram, render_system

    obj = _need_in(args)
    if isinstance(obj, WiringDiagram):
        svg = render_diagram(obj)
    else:
        svg = render_system(_as_system(obj, args.tolerance))
    _emit(svg, args.out)
    _say(args, "wrote SVG")


COMMANDS = {
    "gen": cmd_gen,
    "dualize": cmd_dualize,
    "reduce": cmd_reduce,
    "chirotope": cmd_chirotope,
    "search": cmd_search,
    "verify": cmd_verify,
    "realize": cmd_realize,
    "render": cmd_render,
}


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="convexpos", description="Convex position in arrangements of convex bodies and generalized configurations.")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--in", dest="inp", metavar="FILE")
    common.add_argument("--out", metavar="FILE")
    common.add_argument("--seed", type=int, default=0)
    common.add_argument("--n", type=int, default=5)
    common.add_argument("--grid", type=int, default=None)
    common.add_argument("--tolerance", type=float, default=EPS)
    sub = p.add_subparsers(dest="command", required=True)
    g = sub.add_parser("gen", parents=[common], help="generate a random or structured instance")
    g.add_argument("kind", choices=["points", "polygons", "diagram", "lower-bound"])
    sub.add_parser("dualize", parents=[common], help="arrangement -> curve system")
    r = sub.add_parser("reduce", parents=[common], help="flip empty zones until orientable")
    r.add_argument("--log", metavar="FILE", help="write the flip log here")
    sub.add_parser("chirotope", parents=[common], help="chirotope of a system, diagram or arrangement")
    sub.add_parser("search", parents=[common], help="look for n convexly independent elements")
    v = sub.add_parser("verify", parents=[common], help="check a file or run a property suite")
    v.add_argument("--suite", choices=["weakmap", "oracle", "axioms", "bound"])
    v.add_argument("--instances", type=int, default=100)
    v.add_argument("--workers", type=int, default=1)
    v.add_argument("--against", metavar="FILE")
    sub.add_parser("realize", parents=[common], help="realize a wiring diagram by convex polygons")
    sub.add_parser("render", parents=[common], help="schematic SVG of a diagram or system")
    return p


MALFORMED = (io.MalformedInput, InvalidDiagram, InvalidSystem, UnknownLabel, NotGeneric, ClusterOverlap, UnequalSizes)


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        COMMANDS[args.command](args)
    except VerificationFailed as err:
        print(json.dumps({"error": "verification failed", "detail": str(err)}), file=sys.stderr)
        return 1
    except AxiomViolation as err:
        print(json.dumps({"error": "verification failed", "detail": str(err)}), file=sys.stderr)
        return 1
    except MALFORMED as err:
        print(json.dumps({"error": type(err).__name__, "detail": str(err)}), file=sys.stderr)
        return 2
    except ConvexPosError as err:
        print(json.dumps({"error": type(err).__name__, "detail": str(err)}), file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

    maxplus solve --a A.txt --b B.txt --init u.txt [--method cyclic]
    maxplus project-halfspace --halfspace H.txt --point x.txt
    maxplus distance (--halfspace H.txt | --generators V.txt) --point x.txt
    maxplus canonicalize --halfspace H.txt
    maxplus best-approx --halfspace H.txt --point x.txt
    maxplus project-semimodule --generators V.txt --point x.txt
    maxplus separate --generators V.txt --point x.txt
    maxplus compare --a A.txt --b B.txt --init u.txt

File formats (whitespace tokens; -inf, +inf, integers, decimals, p/q):
vectors are "n" then one row; matrices and generator families are
"p n" then p rows; half-spaces are "n" then the a row then the b row.

Mode: --mode int parses integers only and terminates on exact fixed
points; --mode float parses floats and terminates at --tol (default
1e-9).  Without --mode, files with only integer finite tokens run in
int mode, anything else in float mode.

Exit status: 0 success (including informative outcomes like "the point
already lies in the set"); 1 when a solve ends in BottomReached or
IterationCapHit; 2 for unusable input (parse errors with line/column,
dimension mismatches, wrong option combinations).

Indices in all output are 0-based.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import halfspace as hs
from . import semimodule as sm
from . import solvers
from .errors import (InfiniteDistanceError, MaxplusError, PointInSetError)
from .extreal import format_scalar, op_count, reset_op_count
from .tropical_linalg import format_vector, parse_matrix, parse_vector

DEFAULT_TOL = 1e-9


def _read(path):
    try:
        with open(path, "r", encoding="utf-8") as f:
            return f.read()
    except OSError as e:
        raise MaxplusError(f"cannot read {path}: {e.strerror}") from None


def _all_integral(objs):
    def entries(o):
        if hasattr(o, "entries"):
            return o.entries
        if hasattr(o, "rows"):
            return [e for r in o.rows for e in r]
        if hasattr(o, "generators"):
            return [e for g in o.generators for e in g]
        raise TypeError(type(o).__name__)

    for o in objs:
        for e in entries(o):
            if e.is_finite and not isinstance(e.value, int):
                return False
    return True


def _load(args, parse, path):
    """Parse one input file under the requested or inferred mode."""
    return parse(_read(path), args.mode)


def _resolve_mode(args, parsed_objects):
    """Fill in args.mode/args.tol after parsing: int mode means exact
    termination (tol None), float mode uses --tol."""
    if args.mode is None:
        args.mode = "int" if _all_integral(parsed_objects) else "float"
    args.tol = None if args.mode == "int" else (
        args.tol if args.tol is not None else DEFAULT_TOL)


def _tokens(x):
    return [format_scalar(e) for e in x]


def _print_vector(x):
    sys.stdout.write(format_vector(x))


def _emit(args, payload, text):
    if args.output == "json":
        print(json.dumps(payload, sort_keys=True))
    else:
        text()


def _max_iters(args):
    if args.max_iters is not None:
        return args.max_iters
    env = os.environ.get("MPS_MAX_ITERS")
    if env is not None:
        try:
            return int(env)
        except ValueError:
            raise MaxplusError(f"MPS_MAX_ITERS is not an integer: {env!r}") from None
    return solvers.DEFAULT_MAX_ITERS


def _report_json(report):
    out = {
        "status": report.status.value,
        "solution": _tokens(report.solution),
        "iterations": report.iterations,
    }
    if report.trace is not None:
        out["trace"] = [_tokens(p) for p in report.trace.points]
    return out


def _print_report(label, report):
    print(f"method: {label}")
    print(f"status: {report.status.value}")
    print(f"iterations: {report.iterations}")
    print(f"solution: {' '.join(_tokens(report.solution))}")
    print(f"iteration bound n*d(u,limit): {format_scalar(report.distance_bound_used)}")
    if report.trace is not None:
        print("trace:")
        for p in report.trace.points:
            print("  " + " ".join(_tokens(p)))


def _solver_exit(*reports):
    return 0 if all(r.status is solvers.Status.SOLVED for r in reports) else 1


def cmd_solve(args):
    A = _load(args, parse_matrix, args.a)
    B = _load(args, parse_matrix, args.b)
    u = _load(args, parse_vector, args.init)
    _resolve_mode(args, [A, B, u])
    S = solvers.InequalitySystem(A, B)
    cap = _max_iters(args)
    methods = ["cyclic", "power"] if args.method == "both" else [args.method]
    run = {"cyclic": solvers.cyclic_solve, "power": solvers.power_solve}
    reports = {m: run[m](S, u, max_iters=cap, tol=args.tol,
                         keep_trace=args.trace) for m in methods}
    if args.output == "json":
        if len(reports) == 1:
            payload = _report_json(reports[args.method])
        else:
            payload = {m: _report_json(r) for m, r in reports.items()}
        print(json.dumps(payload, sort_keys=True))
    else:
        for m in methods:
            _print_report(m, reports[m])
    return _solver_exit(*reports.values())


def cmd_compare(args):
    A = _load(args, parse_matrix, args.a)
    B = _load(args, parse_matrix, args.b)
    u = _load(args, parse_vector, args.init)
    _resolve_mode(args, [A, B, u])
    S = solvers.InequalitySystem(A, B)
    cap = _max_iters(args)
    reset_op_count()
    cyc = solvers.cyclic_solve(S, u, max_iters=cap, tol=args.tol, keep_trace=True)
    cyc_ops = op_count()
    reset_op_count()
    pow_ = solvers.power_solve(S, u, max_iters=cap, tol=args.tol, keep_trace=True)
    pow_ops = op_count()
    agree = cyc.solution == pow_.solution
    sandwich = solvers.sandwich_check(S, u) if args.tol is None else None

    def side(report, ops):
        d = _report_json(report)
        d["finite_additions"] = ops
        return d

    payload = {
        "cyclic": side(cyc, cyc_ops),
        "power": side(pow_, pow_ops),
        "solutions_agree": agree,
        "sandwich": sandwich,
    }

    def text():
        _print_report("cyclic", cyc)
        print(f"finite additions: {cyc_ops}")
        _print_report("power", pow_)
        print(f"finite additions: {pow_ops}")
        print(f"solutions agree: {agree}")
        if sandwich is not None:
            print(f"sandwich holds: {sandwich}")

    _emit(args, payload, text)
    if not agree:
        return 1
    return _solver_exit(cyc, pow_)


def cmd_project_halfspace(args):
    H = _load(args, hs.parse_halfspace, args.halfspace)
    x = _load(args, parse_vector, args.point)
    P = hs.project(H, x)
    _emit(args, {"projection": _tokens(P)}, lambda: _print_vector(P))
    return 0


def cmd_project_semimodule(args):
    V = _load(args, sm.parse_generators, args.generators)
    x = _load(args, parse_vector, args.point)
    P = sm.project(V, x)
    _emit(args, {"projection": _tokens(P)}, lambda: _print_vector(P))
    return 0


def cmd_distance(args):
    x = _load(args, parse_vector, args.point)
    if args.halfspace:
        H = _load(args, hs.parse_halfspace, args.halfspace)
        d = hs.distance(H, x)
    else:
        V = _load(args, sm.parse_generators, args.generators)
        d = sm.distance_to(V, x)
    _emit(args, {"distance": format_scalar(d)},
          lambda: print(format_scalar(d)))
    return 0


def cmd_canonicalize(args):
    H = _load(args, hs.parse_halfspace, args.halfspace)
    C = hs.canonicalize(H)
    apex, sectors = hs.apex_and_sectors(C)
    payload = {
        "a_prime": _tokens(C.a_prime),
        "b_prime": _tokens(C.b_prime),
        "I": sorted(C.I),
        "J": sorted(C.J),
        "apex": _tokens(apex),
        "sectors": [{"pivot": s.pivot, "a": _tokens(s.halfspace.a),
                     "b": _tokens(s.halfspace.b)} for s in sectors],
    }

    def text():
        print(f"a': {' '.join(payload['a_prime'])}")
        print(f"b': {' '.join(payload['b_prime'])}")
        print(f"I: {payload['I']}")
        print(f"J: {payload['J']}")
        print(f"apex: {' '.join(payload['apex'])}")
        for s in payload["sectors"]:
            print(f"sector {s['pivot']}: a = {' '.join(s['a'])}; "
                  f"b = {' '.join(s['b'])}")

    _emit(args, payload, text)
    return 0


def _face_json(face):
    return {
        "pivot": face.pivot,
        "fixed": {str(j): format_scalar(v) for j, v in sorted(face.fixed.items())},
        "box": {str(k): [format_scalar(lo), format_scalar(hi)]
                for k, (lo, hi) in sorted(face.box.items())},
    }


def cmd_best_approx(args):
    H = _load(args, hs.parse_halfspace, args.halfspace)
    x = _load(args, parse_vector, args.point)
    try:
        result = hs.best_approx_set(H, x)
    except PointInSetError:
        d = hs.distance(H, x)
        _emit(args, {"in_set": True, "distance": format_scalar(d)},
              lambda: print("the point already lies in the half-space; "
                            f"distance {format_scalar(d)}"))
        return 0
    except InfiniteDistanceError:
        _emit(args, {"distance": "+inf", "all_of_halfspace": True},
              lambda: print("distance is +inf; every point of the "
                            "half-space is a nearest point"))
        return 0
    payload = {
        "distance": format_scalar(result.base_distance),
        "faces": [_face_json(f) for f in result.faces],
    }

    def text():
        print(f"distance: {payload['distance']}")
        for f in payload["faces"]:
            fixed = ", ".join(f"h{j} = {v}" for j, v in f["fixed"].items())
            box = ", ".join(f"{lo} <= h{k} <= {hi}"
                            for k, (lo, hi) in f["box"].items())
            line = f"face pivot {f['pivot']}: {fixed}"
            if box:
                line += "; " + box
            print(line + "  (translate by any finite constant)")

    _emit(args, payload, text)
    return 0


def cmd_separate(args):
    V = _load(args, sm.parse_generators, args.generators)
    x = _load(args, parse_vector, args.point)
    P = sm.project(V, x)
    if P == x:
        _emit(args, {"in_set": True},
              lambda: print("the point belongs to the semimodule; "
                            "nothing separates it"))
        return 0
    reduced = any(e.is_neg_inf for e in P) or not all(e.is_finite for e in x)
    if reduced:
        try:
            x_r, V_r, index_map = sm.reduce_problem(V, x)
        except InfiniteDistanceError:
            _emit(args, {"distance": "+inf", "separable": False},
                  lambda: print("distance is +inf: no element of the "
                                "semimodule has the support of the point"))
            return 0
        H = sm.universal_halfspace(V_r, x_r)
        d = sm.distance_to(V_r, x_r)
        index_map = list(index_map)
    else:
        H = sm.universal_halfspace(V, x)
        d = sm.distance_to(V, x)
        index_map = list(range(len(x)))
    payload = {
        "a": _tokens(H.a),
        "b": _tokens(H.b),
        "reduced": reduced,
        "index_map": index_map,
        "distance": format_scalar(d),
        "projection": _tokens(P),
    }

    def text():
        if reduced:
            print(f"reduced to support coordinates {index_map}")
        print(f"a: {' '.join(payload['a'])}")
        print(f"b: {' '.join(payload['b'])}")
        print(f"distance: {payload['distance']}")
        print(f"projection: {' '.join(payload['projection'])}")

    _emit(args, payload, text)
    return 0


def build_parser():
    parser = argparse.ArgumentParser(
        prog="maxplus",
        description="Best approximation and feasibility in max-plus "
                    "semimodules.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--mode", choices=["int", "float"], default=None,
                       help="token domain and termination style "
                            "(default: inferred from the inputs)")
        p.add_argument("--output", choices=["text", "json"], default="text")
        p.set_defaults(tol=None)

    def solver_opts(p):
        p.add_argument("--tol", type=float, default=None,
                       help=f"float-mode termination tolerance "
                            f"(default {DEFAULT_TOL})")
        p.add_argument("--max-iters", type=int, default=None,
                       help="sweep/step cap (env MPS_MAX_ITERS, default "
                            f"{solvers.DEFAULT_MAX_ITERS})")

    p = sub.add_parser("solve", help="greatest solution of Ax >= Bx below u")
    p.add_argument("--a", required=True, metavar="FILE")
    p.add_argument("--b", required=True, metavar="FILE")
    p.add_argument("--init", required=True, metavar="FILE")
    p.add_argument("--method", choices=["cyclic", "power", "both"],
                   default="cyclic")
    p.add_argument("--trace", action="store_true")
    common(p)
    solver_opts(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("compare",
                       help="run both methods, check the sandwich property, "
                            "count finite additions")
    p.add_argument("--a", required=True, metavar="FILE")
    p.add_argument("--b", required=True, metavar="FILE")
    p.add_argument("--init", required=True, metavar="FILE")
    common(p)
    solver_opts(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("project-halfspace",
                       help="greatest element of a half-space below a point")
    p.add_argument("--halfspace", required=True, metavar="FILE")
    p.add_argument("--point", required=True, metavar="FILE")
    common(p)
    p.set_defaults(func=cmd_project_halfspace)

    p = sub.add_parser("project-semimodule",
                       help="greatest element of a generated semimodule "
                            "below a point")
    p.add_argument("--generators", required=True, metavar="FILE")
    p.add_argument("--point", required=True, metavar="FILE")
    common(p)
    p.set_defaults(func=cmd_project_semimodule)

    p = sub.add_parser("distance",
                       help="projective distance from a point to a "
                            "half-space or semimodule")
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--halfspace", metavar="FILE")
    g.add_argument("--generators", metavar="FILE")
    p.add_argument("--point", required=True, metavar="FILE")
    common(p)
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("canonicalize",
                       help="disjoint-support form, apex, and sectors")
    p.add_argument("--halfspace", required=True, metavar="FILE")
    common(p)
    p.set_defaults(func=cmd_canonicalize)

    p = sub.add_parser("best-approx",
                       help="all nearest points of a half-space")
    p.add_argument("--halfspace", required=True, metavar="FILE")
    p.add_argument("--point", required=True, metavar="FILE")
    common(p)
    p.set_defaults(func=cmd_best_approx)

    p = sub.add_parser("separate",
                       help="universal half-space containing the semimodule "
                            "and excluding the point")
    p.add_argument("--generators", required=True, metavar="FILE")
    p.add_argument("--point", required=True, metavar="FILE")
    common(p)
    p.set_defaults(func=cmd_separate)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (MaxplusError, ValueError) as e:
        print(f"error: {e}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

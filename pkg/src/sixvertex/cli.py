"""Command-line front end.

    sixvertex series --what Q --gamma 1 --order 3
    sixvertex verify --suite classical --order 30
    sixvertex oracle --vertices 2 --mode eo

Exit codes: 0 success, 1 verification failure, 2 internal inconsistency,
3 usage error. Coefficients are always printed as exact strings.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from typing import Sequence

from .errors import (
    CancellationFailure,
    ExpressionsDisagree,
    IncompatibleRoute,
    SizeLimitExceeded,
    SixVertexError,
)
from .ring import PolyGamma, rat_str

EXIT_OK, EXIT_FAIL, EXIT_INCONSISTENT, EXIT_USAGE = 0, 1, 2, 3
ORDER_ENV = "SIXVERTEX_ORDER"
TIMING_ENV = "SIXVERTEX_NO_TIMING"
SCHEMA = 1


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def default_order() -> int:
    raw = os.environ.get(ORDER_ENV)
    if raw is None:
        return 20
    try:
        return int(raw)
    except ValueError:
        raise UsageError(f"{ORDER_ENV} must be an integer, got {raw!r}") from None


def coeff_str(c) -> str:
    if isinstance(c, PolyGamma):
        return c.to_str("g")
    return rat_str(c)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="sixvertex", description="Exact series for Eulerian orientations and the six-vertex model.")
    p.add_argument("--no-timing", action="store_true", help="report elapsed_ms as 0 (byte-identical reports)")
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--no-timing", action="store_true", default=argparse.SUPPRESS,
                        help="report elapsed_ms as 0 (byte-identical reports)")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    s = sub.add_parser("series", parents=[common], help="print the coefficients of G, Q, R or q")
    s.add_argument("--what", choices=["G", "Q", "R", "q"], required=True)
    s.add_argument("--gamma", help="a rational such as 1 or -1/2, or 'symbolic'")
    s.add_argument("--order", type=int, help="number of coefficients, from t^1 (default 20)")
    s.add_argument("--route", default="auto", choices=["auto", "thm1", "thm2", "theta", "pcd", "pcd-closed", "wh"])
    s.add_argument("--format", default="plain", choices=["plain", "json"])

    v = sub.add_parser("verify", parents=[common], help="run identity and agreement suites")
    v.add_argument("--suite", default="all", choices=["all", "theta", "classical", "systems", "oracle"])
    v.add_argument("--order", type=int)
    v.add_argument("--format", default="plain", choices=["plain", "json"])

    o = sub.add_parser("oracle", parents=[common], help="exhaustive counts on small maps")
    size = o.add_mutually_exclusive_group(required=True)
    size.add_argument("--edges", type=int)
    size.add_argument("--vertices", type=int)
    o.add_argument("--mode", default="eo", choices=["eo", "partial", "labelled", "bijections"])
    o.add_argument("--dump", action="store_true", help="list the maps in cycle notation")
    o.add_argument("--format", default="plain", choices=["plain", "json"])
    return p


def _report(command: str, params: dict, results: list[dict], start: float, no_timing: bool) -> dict:
    elapsed = 0 if no_timing else int(round((time.perf_counter() - start) * 1000))
    return {"schema": SCHEMA, "command": command, "params": params, "results": results, "elapsed_ms": elapsed}


def _emit(report: dict, fmt: str, plain_lines: list[str]) -> None:
    if fmt == "json":
        print(json.dumps(report, indent=2, sort_keys=False))
    else:
        print("\n".join(plain_lines))


def cmd_series(args, start: float, no_timing: bool) -> int:
    from .routes import applicable_routes, compute, parse_gamma

    N = args.order if args.order is not None else default_order()
    if N < 1:
        raise UsageError("--order must be positive")
    gamma = parse_gamma(args.gamma)
    if args.what == "G" and gamma is None:
        gamma = 0
    routes = applicable_routes(args.what, gamma)
    chosen = routes if args.route == "auto" else [args.route]
    series = {r: compute(args.what, gamma, N, r) for r in chosen}
    ref_route = chosen[0]
    ref = series[ref_route]
    for r in chosen[1:]:
        k = ref.first_difference(series[r])
        if k is not None:
            print(f"routes {ref_route} and {r} disagree at t^{k}", file=sys.stderr)
            return EXIT_INCONSISTENT
    data = {str(n): coeff_str(ref[n]) for n in range(1, N + 1)}
    params = {"what": args.what, "gamma": "symbolic" if gamma == "symbolic" else rat_str(gamma),
              "order": N, "route": args.route}
    results = [{"name": args.what, "anchor": "+".join(chosen), "status": "pass", "data": data}]
    _emit(_report("series", params, results, start, no_timing), args.format,
          [f"{n}: {v}" for n, v in data.items()])
    return EXIT_OK


def cmd_verify(args, start: float, no_timing: bool) -> int:
    from .verify import run

    N = args.order if args.order is not None else default_order()
    if N < 0:
        raise UsageError("--order must be nonnegative")
    results = run(args.suite, N)
    report = _report("verify", {"suite": args.suite, "order": N}, [r.to_json() for r in results], start, no_timing)
    lines = []
    for r in results:
        where = "" if r.first_failure is None else f" (first failure at order {r.first_failure})"
        lines.append(f"{r.status.upper()}  {r.name}{where}")
    failed = sum(not r.passed for r in results)
    lines.append(f"{len(results) - failed}/{len(results)} passed")
    _emit(report, args.format, lines)
    return EXIT_OK if failed == 0 else EXIT_FAIL


def cmd_oracle(args, start: float, no_timing: bool) -> int:
    from . import oracle as orc

    n, unit = (args.vertices, "vertices") if args.vertices is not None else (args.edges, "edges")
    if n < 1:
        raise UsageError(f"--{unit} must be positive")
    if unit == "vertices":
        if args.mode != "eo":
            raise UsageError("--vertices is used with --mode eo (quartic maps)")
        maps = orc.enumerate_quartic(n)
    else:
        maps = orc.enumerate_maps(n)
    data: dict = {"maps": len(maps)}
    status = "pass"
    if args.mode == "eo":
        count = orc.count_euler_orientations(maps, weight_alternating=unit == "vertices")
        data["count"] = count.to_str("g") if isinstance(count, PolyGamma) else rat_str(count)
    elif args.mode == "partial":
        data["count"] = orc.count_partial_orientations(maps).to_str("g")
    elif args.mode == "labelled":
        labelled = orc.labelled_maps(n)
        images = {orc.dual_labelling(o).key() for m in maps for o in orc.euler_orientations(m)}
        data["labelled_maps"] = len(labelled)
        data["dual_images"] = len(images)
        if images != {lm.key() for lm in labelled}:
            status = "fail"
    else:
        labelled = {lm.key() for lm in orc.labelled_maps(n)}
        quads = orc.labelled_quadrangulations(n, colourful_only=True)
        fibres: dict = {}
        for q in quads:
            key = orc.ambjorn_budd(q).key()
            fibres[key] = fibres.get(key, 0) + 1
        data["colourful_quadrangulations"] = len(quads)
        data["labelled_maps"] = len(labelled)
        data["fibre_sizes"] = sorted(set(fibres.values()))
        if set(fibres) != labelled or set(fibres.values()) != {2}:
            status = "fail"
    if args.dump:
        data["dump"] = [m.dump() for m in maps]
    params = {unit: n, "mode": args.mode, "dump": args.dump}
    results = [{"name": f"oracle-{args.mode}", "anchor": f"{n} {unit}", "status": status, "data": data}]
    lines = [f"{k}: {v}" for k, v in data.items() if k != "dump"]
    if args.dump:
        lines += data["dump"]
    _emit(_report("oracle", params, results, start, no_timing), args.format, lines)
    return EXIT_OK if status == "pass" else EXIT_FAIL


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code) if isinstance(exc.code, int) else EXIT_USAGE
    no_timing = args.no_timing or bool(os.environ.get(TIMING_ENV))
    start = time.perf_counter()
    handler = {"series": cmd_series, "verify": cmd_verify, "oracle": cmd_oracle}[args.command]
    try:
        return handler(args, start, no_timing)
    except (UsageError, IncompatibleRoute, SizeLimitExceeded) as exc:
        print(f"sixvertex: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except (ExpressionsDisagree, CancellationFailure) as exc:
        print(f"sixvertex: internal inconsistency: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT
    except SixVertexError as exc:
        print(f"sixvertex: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_INCONSISTENT


if __name__ == "__main__":
    sys.exit(main())

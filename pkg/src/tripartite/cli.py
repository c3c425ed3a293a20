"""Command-line front end: ``python -m tripartite <subcommand> ...``.

Reports go to standard output (or ``--out``) with stable key order; timing
information goes to standard error only, so stdout is reproducible.
"""

from __future__ import annotations

import argparse
import json
import logging
import math
import sys
import time
from pathlib import Path

from . import bounds
from .constructions import (
    Construction2Params, audit, construction1, construction2, generalized_construction,
)
from .errors import TripartiteError
from .finder import run_pipeline
from .formats import decode, encode
from .graph import BipartiteGraph, TripartiteGraph, find_k2s, find_k3s
from .plane import build_plane, check_plane_axioms, incidence_graph
from .search import (
    append_result, brute_force_zarankiewicz, extremal_min_degree, local_search_lower_bound,
)

log = logging.getLogger("tripartite")

EXIT_OK, EXIT_ERROR, EXIT_NOT_FOUND = 0, 1, 2


def _dump(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def _read(path) -> TripartiteGraph | BipartiteGraph:
    return decode(Path(path).read_text())


def _need(G, kind, what):
    if not isinstance(G, kind):
        raise TripartiteError(f"{what} needs a {'TG3' if kind is TripartiteGraph else 'BG2'} file")
    return G


def cmd_plane(args):
    plane = build_plane(args.q)
    B = incidence_graph(plane)
    if args.format == "json":
        return _dump({
            "q": plane.q,
            "points": plane.size,
            "line_size": len(plane.incidence[0]),
            "axiom_violations": check_plane_axioms(plane),
            "edges": B.num_edges,
            "k2s_free": find_k2s(B, 2).free,
        }), EXIT_OK
    return encode(B), EXIT_OK


def cmd_construct(args):
    if args.base is not None:
        base = _need(_read(args.base), BipartiteGraph, "--base")
        G = generalized_construction(base, args.variant, args.s, args.x2, args.seed, args.base_seed)
    elif args.q is None:
        raise TripartiteError("construct needs --q or --base")
    elif args.variant == 1:
        G = construction1(args.q)
    else:
        n = args.q * args.q + args.q + 1
        x2 = args.x2 if args.x2 is not None else math.isqrt(n - 1) + 1
        G = construction2(Construction2Params(args.q, x2, args.seed, args.base_seed))
    return encode(G), EXIT_OK


def cmd_verify(args):
    G = _read(args.input)
    if args.forbid == "k2s":
        rep = find_k2s(_need(G, BipartiteGraph, "--forbid k2s"), args.s)
    else:
        rep = find_k3s(_need(G, TripartiteGraph, "--forbid k3s"), args.s, args.workers)
    out = rep.to_dict()
    out["result"] = "free" if rep.free else "contains"
    return _dump(out), EXIT_OK


def cmd_audit(args):
    G = _need(_read(args.input), TripartiteGraph, "audit")
    return _dump(audit(G, args.s, args.eps, args.workers).to_dict()), EXIT_OK


def cmd_bounds(args):
    if args.n_to < args.n_from:
        raise TripartiteError("--n-to must be at least --n-from")
    ns = range(args.n_from, args.n_to + 1)
    if args.csv:
        return bounds.bounds_csv(ns, args.s, args.eps), EXIT_OK
    out = {"rows": [bounds.threshold_report(n, args.s, args.eps).to_dict() for n in ns]}
    if args.eps > 0:
        out["eqB_min_n"] = bounds.eqB_min_n(args.s, args.eps)
    return _dump(out), EXIT_OK


def cmd_find(args):
    G = _need(_read(args.input), TripartiteGraph, "find")
    if args.method == "exact":
        rep = find_k3s(G, args.s, args.workers)
        out = {"method": "exact", "found": rep.witness is not None,
               "certificate": None if rep.witness is None else json.loads(rep.witness.to_json())}
        return _dump(out), EXIT_OK if rep.witness is not None else EXIT_NOT_FOUND
    trace = run_pipeline(G, args.s, args.eps, args.workers)
    out = {"method": "proof", **trace.to_dict()}
    return _dump(out), EXIT_OK if trace.certificate is not None else EXIT_NOT_FOUND


def cmd_zarankiewicz(args):
    res = brute_force_zarankiewicz(args.n, args.s, force=args.force)
    if args.results:
        append_result(args.results, res)
    return _dump(res.to_record()), EXIT_OK


def cmd_extremal(args):
    if args.heuristic:
        res = local_search_lower_bound(args.n, args.s, args.seed, args.budget)
    else:
        res = extremal_min_degree(args.n, args.s, force=args.force)
    if args.results:
        append_result(args.results, res)
    return _dump(res.to_record()), EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="tripartite", description=__doc__.splitlines()[0])
    ap.add_argument("--deterministic", action="store_true",
                    help="single-worker search everywhere (byte-identical output)")
    ap.add_argument("--workers", type=int, default=1)
    ap.add_argument("--out", help="write the report to this file instead of stdout")
    # the same options are accepted after the subcommand name
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--deterministic", action="store_true", default=argparse.SUPPRESS)
    common.add_argument("--workers", type=int, default=argparse.SUPPRESS)
    common.add_argument("--out", default=argparse.SUPPRESS)
    sub = ap.add_subparsers(dest="command", required=True)

    p = sub.add_parser("plane", parents=[common], help="projective plane incidence graph")
    p.add_argument("--q", type=int, required=True)
    p.add_argument("--format", choices=["bg2", "json"], default="bg2")
    p.set_defaults(func=cmd_plane)

    p = sub.add_parser("construct", parents=[common], help="K3(s)-free construction as TG3")
    p.add_argument("--variant", type=int, choices=[1, 2], required=True)
    p.add_argument("--q", type=int)
    p.add_argument("--x2", type=int)
    p.add_argument("--seed", type=int, default=0, help="partition seed")
    p.add_argument("--base-seed", type=int, default=0, help="base graph placement seed")
    p.add_argument("--base", help="BG2 file replacing the projective plane graph")
    p.add_argument("--s", type=int, default=2)
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("verify", parents=[common], help="exhaustive K2(s)/K3(s) detection")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--forbid", choices=["k2s", "k3s"], required=True)
    p.add_argument("--s", type=int, default=2)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("audit", parents=[common], help="degree, triangle and freeness audit")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--eps", type=float, default=0.0)
    p.set_defaults(func=cmd_audit)

    p = sub.add_parser("bounds", parents=[common], help="threshold formulas over a range of n")
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--eps", type=float, default=0.0)
    p.add_argument("--n-from", type=int, required=True)
    p.add_argument("--n-to", type=int, required=True)
    p.add_argument("--csv", action="store_true")
    p.set_defaults(func=cmd_bounds)

    p = sub.add_parser("find", parents=[common], help="extract a K3(s) certificate")
    p.add_argument("--in", dest="input", required=True)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--eps", type=float, default=1.0)
    p.add_argument("--method", choices=["proof", "exact"], default="proof")
    p.set_defaults(func=cmd_find)

    p = sub.add_parser("zarankiewicz", parents=[common], help="exact z(n, s) by exhaustive search")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--force", action="store_true")
    p.add_argument("--results", help="append the result as a JSON line to this file")
    p.set_defaults(func=cmd_zarankiewicz)

    p = sub.add_parser("extremal", parents=[common], help="max min-degree of K3(s)-free G_3(n)")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--s", type=int, default=2)
    p.add_argument("--heuristic", action="store_true")
    p.add_argument("--budget", type=int, default=2000)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--force", action="store_true")
    p.add_argument("--results", help="append the result as a JSON line to this file")
    p.set_defaults(func=cmd_extremal)
    return ap


def run(argv=None) -> int:
    ap = build_parser()
    try:
        args = ap.parse_args(argv)
    except SystemExit as exc:
        return EXIT_ERROR if exc.code else EXIT_OK
    if args.deterministic:
        args.workers = 1
    logging.basicConfig(level=logging.INFO, format="%(asctime)s %(message)s", stream=sys.stderr)
    start = time.perf_counter()
    try:
        text, code = args.func(args)
    except TripartiteError as exc:
        print(f"error: {type(exc).__name__}: {exc}", file=sys.stderr)
        return EXIT_ERROR
    except (OSError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_ERROR
    if args.out:
        Path(args.out).write_text(text, newline="\n")
    else:
        sys.stdout.write(text)
    log.info("%s finished in %.3f s", args.command, time.perf_counter() - start)
    return code


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()

"""Command-line front end.

Exit codes: 0 success, 1 input error, 2 internal invariant breach,
3 verification mismatch.  Randomized subcommands require an explicit
--seed; there is no ambient entropy, so failures replay exactly.  With
--json each subcommand emits a run report {command, input_digest, seed,
engine_version, runtime_ms, result} whose result payload is stable for
fixed inputs and seed.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import sys
import time

from . import __version__
from .counting import (
    OrderedMonotoneGraph,
    count_maximal_x_monotone,
    count_monotone_all,
    count_x_monotone,
    enumerate_monotone_all,
    enumerate_x_monotone,
)
from .directions import build_direction_set
from .fingerprint import bound_report, census_k4, search_pk
from .geometry import (
    GraphError,
    InvariantError,
    Vector,
    random_scan_triangulation,
    validate_plane,
)
from .instances import growth_probe, lower_bound_graph, square_with_diagonal
from .oracle import CapExceeded, brute_force_paths, is_weakly_monotone
from . import graphio

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_INVARIANT = 2
EXIT_MISMATCH = 3


class Mismatch(Exception):
    """Engine and oracle disagree."""


def _digest(path: str | None) -> str | None:
    if path is None:
        return None
    with open(path, "rb") as fh:
        return hashlib.sha256(fh.read()).hexdigest()


def _report(args, payload: dict, t0: float, digest: str | None, seed: int | None):
    if not args.json:
        return
    out = {
        "command": " ".join(args.argv),
        "input_digest": digest,
        "seed": seed,
        "engine_version": __version__,
        "runtime_ms": int((time.perf_counter() - t0) * 1000),
        "result": payload,
    }
    print(json.dumps(out, indent=1))


def _load_graph(path: str):
    try:
        return graphio.load_path(path)
    except (OSError, ValueError, KeyError) as exc:
        raise GraphError(f"cannot read graph file {path}: {exc}") from exc


def cmd_count(args) -> int:
    t0 = time.perf_counter()
    g = _load_graph(args.graph)
    if args.emit_directions:
        if isinstance(g, OrderedMonotoneGraph):
            raise GraphError("abstract graphs have no geometric directions")
        for u in build_direction_set(g).directions:
            print(f"{u.dx} {u.dy}")
        return EXIT_OK
    payload: dict = {}
    if args.mode == "x":
        omg = g if isinstance(g, OrderedMonotoneGraph) else OrderedMonotoneGraph.from_plane_graph(g, Vector(1, 0))
        tally = count_maximal_x_monotone(omg) if args.maximal else count_x_monotone(omg)
        payload = {"n": omg.n, "mode": "x", "maximal": bool(args.maximal), "total": tally.total}
        if not args.json:
            kind = "maximal x-monotone" if args.maximal else "x-monotone"
            print(f"{kind} directed paths: {tally.total}")
        if args.enumerate:
            with open(args.enumerate, "w", encoding="utf-8") as fh:
                for p in enumerate_x_monotone(omg):
                    fh.write(" ".join(map(str, p)) + "\n")
    else:
        if isinstance(g, OrderedMonotoneGraph):
            raise GraphError("mode=all needs a geometric graph, not an abstract one")
        if args.maximal:
            raise GraphError("--maximal applies to --mode x only")
        rep = count_monotone_all(g, arrangement=args.arrangement)
        payload = rep.to_json_dict()
        if not args.json:
            print(f"n={rep.n} m={rep.m}")
            print(f"directed monotone paths:   {rep.directed_total}")
            print(f"undirected monotone paths: {rep.undirected_total}")
        if args.enumerate:
            with open(args.enumerate, "w", encoding="utf-8") as fh:
                for p in enumerate_monotone_all(g, dedupe=args.dedupe):
                    fh.write(" ".join(map(str, p)) + "\n")
    _report(args, payload, t0, _digest(args.graph), None)
    return EXIT_OK


def cmd_enumerate(args) -> int:
    g = _load_graph(args.graph)
    out = open(args.out, "w", encoding="utf-8") if args.out else sys.stdout
    try:
        if args.mode == "x":
            omg = g if isinstance(g, OrderedMonotoneGraph) else OrderedMonotoneGraph.from_plane_graph(g, Vector(1, 0))
            it = enumerate_x_monotone(omg)
        else:
            if isinstance(g, OrderedMonotoneGraph):
                raise GraphError("mode=all needs a geometric graph")
            it = enumerate_monotone_all(g, dedupe=args.dedupe)
        count = 0
        for p in it:
            out.write(" ".join(map(str, p)) + "\n")
            count += 1
        print(f"emitted {count} paths", file=sys.stderr)
    finally:
        if out is not sys.stdout:
            out.close()
    return EXIT_OK


def cmd_fingerprint(args) -> int:
    t0 = time.perf_counter()
    rep = search_pk(
        args.k,
        prune=args.prune,
        threads=args.threads,
        listings=args.listings,
        checkpoint=args.checkpoint,
    )
    payload = rep.to_json_dict()
    if not args.json:
        print(f"k={rep.k}  p_k={rep.p_k}")
        print(f"sides: {rep.num_sides}  groups examined: {rep.num_groups}  prune: {rep.prune}")
        print(f"extremal classes: {len(rep.extremal)}")
        for g, text in zip(rep.extremal, payload["extremal"]):
            print("  " + text)
        if rep.listings:
            for listing in rep.listings:
                print("patterns: " + ",".join(listing))
        print(f"wall time: {rep.wall_time_s:.2f}s")
    _report(args, payload, t0, None, None)
    return EXIT_OK


def cmd_census(args) -> int:
    t0 = time.perf_counter()
    rep = census_k4()
    payload = rep.to_json_dict()
    if not args.json:
        for c in sorted(rep.class_counts, reverse=True):
            print(f"{rep.class_counts[c]:4d} classes with {c} patterns")
    _report(args, payload, t0, None, None)
    return EXIT_OK


def cmd_construct(args) -> int:
    if (args.lower_bound is None) == (not args.square):
        raise GraphError("choose exactly one of --lower-bound L or --square")
    if args.lower_bound is not None:
        text = graphio.dumps_abstract_json(lower_bound_graph(args.lower_bound).omg)
    else:
        g = square_with_diagonal()
        text = graphio.dumps_json(g) if args.format == "json" else graphio.dumps_text(g)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as fh:
            fh.write(text if text.endswith("\n") else text + "\n")
    else:
        print(text.rstrip("\n"))
    return EXIT_OK


def cmd_verify(args) -> int:
    t0 = time.perf_counter()
    failures = []
    for trial in range(args.trials):
        seed = args.seed + trial
        g = random_scan_triangulation(args.n, seed, coord_range=10**5)
        if validate_plane(g):
            raise InvariantError(f"generator produced a crossing drawing (seed {seed})")
        strict_count, strict_paths = brute_force_paths(g, "strict", "directed", collect=True)
        if args.mode == "strict":
            rep = count_monotone_all(g)
            emitted = list(enumerate_monotone_all(g))
            ok = (
                rep.directed_total == strict_count
                and len(emitted) == len(set(emitted)) == strict_count
                and set(emitted) == set(strict_paths)
            )
        else:
            weak_count, _ = brute_force_paths(g, "weak", "directed")
            ok = weak_count >= strict_count and all(
                is_weakly_monotone(g, p) for p in strict_paths
            )
        if not ok:
            failures.append(seed)
            print(f"MISMATCH at seed {seed}; instance follows", file=sys.stderr)
            sys.stderr.write(graphio.dumps_text(g))
    payload = {
        "n": args.n,
        "trials": args.trials,
        "mode": args.mode,
        "failures": failures,
    }
    if not args.json:
        print(f"{args.trials - len(failures)}/{args.trials} trials OK (n={args.n}, mode={args.mode})")
    _report(args, payload, t0, None, args.seed)
    return EXIT_MISMATCH if failures else EXIT_OK


def cmd_bound(args) -> int:
    t0 = time.perf_counter()
    rep = bound_report(args.k, args.pk, args.n)
    payload = rep.to_json_dict()
    if not args.json:
        print(f"base: {rep.base}")
        print(f"maximal-path bound: {rep.mu_form}")
        print(f"all-paths bound:    {rep.lambda_form}")
        if rep.mu_bound is not None:
            print(f"bound at n={args.n}: {rep.mu_bound}")
    _report(args, payload, t0, None, None)
    return EXIT_OK


def cmd_bench(args) -> int:
    t0 = time.perf_counter()
    sizes = [int(s) for s in args.sizes.split(",") if s]
    rows = []
    for n in sizes:
        g = random_scan_triangulation(n, args.seed)
        t1 = time.perf_counter()
        rep = count_monotone_all(g, arrangement=args.arrangement)
        dt = time.perf_counter() - t1
        rows.append({"n": n, "seconds": round(dt, 4), "directions": len(rep.per_direction),
                     "digits": len(str(rep.directed_total))})
        if not args.json:
            print(f"n={n}: {dt:.3f}s  ({len(rep.per_direction)} directions, "
                  f"{len(str(rep.directed_total))}-digit total)")
    ratios = [round(rows[i]["seconds"] / rows[i - 1]["seconds"], 3) for i in range(1, len(rows))]
    if not args.json and ratios:
        print("doubling ratios:", ratios)
    _report(args, {"rows": rows, "ratios": ratios, "arrangement": args.arrangement},
            t0, None, args.seed)
    return EXIT_OK


def cmd_growth(args) -> int:
    t0 = time.perf_counter()
    levels = list(range(args.min_level, args.max_level + 1))
    rows = [
        {"level": lvl, "n": n, "total": total, "root": str(root),
         "maximal_total": mtotal, "maximal_root": str(mroot)}
        for lvl, (n, total, root, mtotal, mroot) in zip(levels, growth_probe(levels))
    ]
    if not args.json:
        for r in rows:
            print(f"level {r['level']:2d}  n={r['n']:6d}  root={r['root']}  "
                  f"maximal_root={r['maximal_root']}")
    _report(args, {"rows": rows}, t0, None, None)
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="monopaths",
                                 description="monotone path counting and incidence-pattern search")
    sub = ap.add_subparsers(dest="cmd", required=True)

    p = sub.add_parser("count", help="count monotone paths in a graph file")
    p.add_argument("--graph", required=True)
    p.add_argument("--mode", choices=["x", "all"], default="all")
    p.add_argument("--maximal", action="store_true")
    p.add_argument("--enumerate", metavar="OUT")
    p.add_argument("--dedupe", action="store_true")
    p.add_argument("--arrangement", action="store_true")
    p.add_argument("--emit-directions", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_count)

    p = sub.add_parser("enumerate", help="stream monotone paths to a file or stdout")
    p.add_argument("--graph", required=True)
    p.add_argument("--mode", choices=["x", "all"], default="all")
    p.add_argument("--dedupe", action="store_true")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_enumerate)

    p = sub.add_parser("fingerprint", help="maximum incidence-pattern search")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--prune", choices=["none", "mutual-maximal"], default="none")
    p.add_argument("--threads", type=int)
    p.add_argument("--listings", action="store_true")
    p.add_argument("--checkpoint")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_fingerprint)

    p = sub.add_parser("census", help="width-4 group census by pattern count")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_census)

    p = sub.add_parser("construct", help="write a named instance")
    p.add_argument("--lower-bound", type=int, metavar="L")
    p.add_argument("--square", action="store_true")
    p.add_argument("--format", choices=["text", "json"], default="text")
    p.add_argument("--out")
    p.set_defaults(fn=cmd_construct)

    p = sub.add_parser("verify", help="engine vs oracle on random triangulations")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--trials", type=int, required=True)
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--mode", choices=["strict", "weak"], default="strict")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_verify)

    p = sub.add_parser("bound", help="growth-rate bound from a pattern maximum")
    p.add_argument("--k", type=int, required=True)
    p.add_argument("--pk", type=int, required=True)
    p.add_argument("--n", type=int)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_bound)

    p = sub.add_parser("bench", help="timing of the all-directions count")
    p.add_argument("--sizes", default="500,1000,2000")
    p.add_argument("--seed", type=int, required=True)
    p.add_argument("--arrangement", action="store_true")
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_bench)

    p = sub.add_parser("growth", help="lower-bound construction growth table")
    p.add_argument("--min-level", type=int, default=2)
    p.add_argument("--max-level", type=int, default=10)
    p.add_argument("--json", action="store_true")
    p.set_defaults(fn=cmd_growth)

    return ap


def main(argv: list[str] | None = None) -> int:
    ap = build_parser()
    raw = list(sys.argv[1:]) if argv is None else list(argv)
    try:
        args = ap.parse_args(raw)
    except SystemExit as exc:
        return EXIT_INPUT if exc.code else EXIT_OK
    args.argv = raw
    try:
        return args.fn(args)
    except (GraphError, CapExceeded, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    except InvariantError as exc:
        print(f"internal invariant breach: {exc}", file=sys.stderr)
        return EXIT_INVARIANT
    except Mismatch as exc:
        print(f"verification mismatch: {exc}", file=sys.stderr)
        return EXIT_MISMATCH


if __name__ == "__main__":
    sys.exit(main())

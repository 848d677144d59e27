"""Command-line entry point: ``fibrun <subcommand> ...``.

Exit codes: 0 ok, 1 verification mismatch, 2 usage or infeasible parameters,
3 invalid vertex string, 4 resource budget exceeded.
"""

from __future__ import annotations

import argparse
import json
import logging
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Optional, Sequence

from . import bounds, constructions
from .barriers import certified_distance, distance_certified
from .errors import BudgetExceededError, ConstructionError, InvalidVertexError
from .graph_oracle import EXHAUSTIVE_MAX_N, all_pairs_check, build_index, diameter_exact, distance_bfs, radius_exact
from .strings import count_vertices, enumerate_vertices, validate_vertex

EXIT_OK, EXIT_MISMATCH, EXIT_USAGE, EXIT_VERTEX, EXIT_BUDGET = 0, 1, 2, 3, 4

_FAMILY_NAMES = {"h": "H", "nh-bar1": "NH-Bar1", "nh-bar2": "NH-Bar2", "thick": "ThickChain"}


class UsageError(Exception):
    pass


def _emit(obj) -> None:
    sys.stdout.write(json.dumps(obj) + "\n")


def _say(value) -> None:
    sys.stdout.write(f"{value}\n")


def _bool(text: str) -> bool:
    low = text.strip().lower()
    if low in ("1", "true", "yes", "y"):
        return True
    if low in ("0", "false", "no", "n"):
        return False
    raise UsageError(f"not a boolean: {text!r}")


def parse_params(text: str) -> dict:
    """``"n=91,q=9,b=6"`` -> ``{"n": 91, "q": 9, "b": 6}``; ``prefix``/``join`` are booleans."""
    out = {}
    for item in filter(None, (t.strip() for t in text.replace(" ", ",").split(","))):
        if "=" not in item:
            raise UsageError(f"expected key=value, got {item!r}")
        key, val = (s.strip() for s in item.split("=", 1))
        if key in ("prefix", "join"):
            out[key] = _bool(val)
        elif key in ("n", "q", "b", "w", "c"):
            try:
                out[key] = int(val)
            except ValueError:
                raise UsageError(f"{key} must be an integer, got {val!r}") from None
        else:
            raise UsageError(f"unknown parameter {key!r}")
    return out


# ------------------------------------------------------------------ commands


def cmd_count(args) -> int:
    _say(count_vertices(args.n))
    return EXIT_OK


def cmd_enum(args) -> int:
    verts = enumerate_vertices(args.n)
    if args.format == "json":
        _emit({"n": args.n, "count": len(verts), "vertices": verts})
    else:
        sys.stdout.write("".join(v + "\n" for v in verts))
    return EXIT_OK


def cmd_distance(args) -> int:
    validate_vertex(args.u, args.n)
    validate_vertex(args.v, args.n)
    formula = bfs = None
    if args.method in ("formula", "both"):
        formula = certified_distance(args.u, args.v)
    if args.method in ("bfs", "both"):
        bfs = distance_bfs(build_index(args.n), args.u, args.v)
    if args.method == "both" and formula != bfs:
        sys.stderr.write(f"mismatch: formula {formula} != bfs {bfs}\n")
        _emit({"u": args.u, "v": args.v, "formula": formula, "bfs": bfs})
        return EXIT_MISMATCH
    _say(formula if formula is not None else bfs)
    return EXIT_OK


def cmd_barriers(args) -> int:
    _emit(distance_certified(args.u, args.v, strict=args.strict).to_dict())
    return EXIT_OK


def cmd_diameter(args) -> int:
    diam, (u, v) = diameter_exact(build_index(args.n), time_budget=args.time_budget, jobs=args.jobs)
    _emit({"n": args.n, "diameter": diam, "witness": [u, v]})
    return EXIT_OK


def cmd_radius(args) -> int:
    rad, centers = radius_exact(build_index(args.n), time_budget=args.time_budget, jobs=args.jobs)
    _emit({"n": args.n, "radius": rad, "centers": centers})
    return EXIT_OK


def cmd_conjecture(args) -> int:
    _say(bounds.conjectured_diameter(args.n))
    return EXIT_OK


def cmd_construct(args) -> int:
    params = parse_params(args.params)
    family = _FAMILY_NAMES[args.family]
    if "n" not in params or "q" not in params:
        raise UsageError("--params needs at least n and q")
    spec = constructions.ConstructionSpec(family=family, **params)
    _emit(constructions.construct(spec).to_dict())
    return EXIT_OK


def cmd_bound(args) -> int:
    _emit(bounds.best_lower_bound(args.n).to_dict())
    return EXIT_OK


def _delta(n: int) -> int:
    return bounds.best_lower_bound(n).delta


def cmd_refute(args) -> int:
    lo, hi = args.lo, args.hi
    if lo > hi:
        raise UsageError("--from must not exceed --to")
    ns = list(range(max(lo, 0), hi + 1))
    if args.jobs > 1 and len(ns) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            deltas = list(pool.map(_delta, ns, chunksize=8))
    else:
        deltas = [_delta(n) for n in ns]
    found = [n for n, d in zip(ns, deltas) if d >= 1]
    _emit({"from": lo, "to": hi, "count": len(found), "ranges": bounds.format_ranges(found), "n": found})
    return EXIT_OK


def cmd_table(args) -> int:
    caps = bounds.DEFAULT_CAPS if args.all_families else bounds.BARRIER_CAPS
    if args.diff:
        sys.stdout.write("".join(line + "\n" for line in bounds.table_diff(args.id, args.p, caps)))
    else:
        sys.stdout.write(bounds.table_csv(args.id, args.p, caps))
    return EXIT_OK


def cmd_verify(args) -> int:
    bad = False
    for n in range(args.min_n, args.max_n + 1):
        index = build_index(n)
        sources = max(1, min(len(index), args.sources))
        per = max(1, -(-args.samples // sources))
        rep = all_pairs_check(
            index,
            certified_distance,
            exhaustive_max_n=args.exhaustive_max_n,
            sources=sources,
            targets_per_source=per,
            seed=args.seed,
        )
        _emit(rep.to_dict())
        bad |= not rep.ok
    return EXIT_MISMATCH if bad else EXIT_OK


# ------------------------------------------------------------------ parser


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(EXIT_USAGE)


def _nonneg(text: str) -> int:
    try:
        val = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"not an integer: {text!r}") from None
    if val < 0:
        raise argparse.ArgumentTypeError(f"must be non-negative: {val}")
    return val


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="fibrun", description="Distances, barriers and diameter bounds on Fibonacci-run graphs.")
    parser.add_argument("--jobs", type=int, default=1, help="worker count (affects time only)")
    parser.add_argument("-v", "--verbose", action="store_true", help="log discrepancies to stderr")
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)
    # --jobs is accepted before or after the subcommand
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--jobs", type=int, default=argparse.SUPPRESS, help="worker count (affects time only)")

    p = sub.add_parser("count", parents=[common], help="number of vertices of R_n")
    p.add_argument("--n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_count)

    p = sub.add_parser("enum", parents=[common], help="list the vertices of R_n")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--format", choices=("lines", "json"), default="lines")
    p.set_defaults(func=cmd_enum)

    p = sub.add_parser("distance", parents=[common], help="distance between two vertices")
    p.add_argument("--n", type=_nonneg, required=True)
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--method", choices=("formula", "bfs", "both"), default="formula")
    p.set_defaults(func=cmd_distance)

    p = sub.add_parser("barriers", parents=[common], help="distance certificate as JSON")
    p.add_argument("--u", required=True)
    p.add_argument("--v", required=True)
    p.add_argument("--strict", action="store_true", help="reject overlapping barriers")
    p.set_defaults(func=cmd_barriers)

    for name, func in (("diameter", cmd_diameter), ("radius", cmd_radius)):
        p = sub.add_parser(name, parents=[common], help=f"exact {name} by BFS")
        p.add_argument("--n", type=_nonneg, required=True)
        p.add_argument("--time-budget", type=float, default=None, help="seconds")
        p.set_defaults(func=func)

    p = sub.add_parser("conjecture", parents=[common], help="conjectured diameter")
    p.add_argument("--n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_conjecture)

    p = sub.add_parser("construct", parents=[common], help="build and validate a witness pair")
    p.add_argument("--family", choices=tuple(_FAMILY_NAMES), required=True)
    p.add_argument("--params", required=True, help="e.g. n=91,q=9,b=6 or n=288,q=21,w=2,c=8,join=1")
    p.set_defaults(func=cmd_construct)

    p = sub.add_parser("bound", parents=[common], help="best certified lower bound on the diameter")
    p.add_argument("--n", type=_nonneg, required=True)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("refute", parents=[common], help="n in a range whose certified bound beats the conjecture")
    p.add_argument("--from", dest="lo", type=_nonneg, required=True)
    p.add_argument("--to", dest="hi", type=_nonneg, required=True)
    p.set_defaults(func=cmd_refute)

    p = sub.add_parser("table", parents=[common], help="recomputed tables as CSV")
    p.add_argument("--id", type=int, choices=(1, 2, 3), required=True)
    p.add_argument("--p", type=_nonneg, default=None)
    p.add_argument("--diff", action="store_true", help="print the diff against the printed table instead")
    p.add_argument("--all-families", action="store_true", help="table 3: include thick chains")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", parents=[common], help="barrier formula against BFS")
    p.add_argument("--max-n", type=_nonneg, required=True)
    p.add_argument("--min-n", type=_nonneg, default=0)
    p.add_argument("--samples", type=int, default=100_000, help="pairs per n in sampled mode")
    p.add_argument("--sources", type=int, default=200, help="BFS sources per n in sampled mode")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--exhaustive-max-n", type=int, default=EXHAUSTIVE_MAX_N)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[Sequence[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.INFO if args.verbose else logging.WARNING, stream=sys.stderr)
    try:
        return args.func(args)
    except InvalidVertexError as exc:
        sys.stderr.write(f"fibrun: invalid vertex: {exc}\n")
        return EXIT_VERTEX
    except BudgetExceededError as exc:
        sys.stderr.write(f"fibrun: budget exceeded: {exc}\n")
        return EXIT_BUDGET
    except (UsageError, ConstructionError, ValueError, TypeError) as exc:
        sys.stderr.write(f"fibrun: {exc}\n")
        return EXIT_USAGE


if __name__ == "__main__":
    sys.exit(main())

"""Command line entry point (``geotrav``)."""
from __future__ import annotations

import argparse
import json
import os
import random
import sys
from concurrent.futures import ThreadPoolExecutor
from pathlib import Path
from typing import Optional, Sequence

from . import instance
from .errors import GeoTravError, InstanceFormatError
from .explorer import explore, iteration_cap
from .generate import generate
from .geograph import compute_pebble_budget, general_position_offset, translated
from .geometry import format_rational
from .mst import MstMeter, check_cycle_lemma, min_spanning_tree, resolve_edges
from .oracle import (
    kruskal,
    verify_enumeration,
    verify_exploration,
    verify_left_neighbor,
    verify_quasi_planar,
    verify_reconstruction,
)
from .svg import render
from .traversal import traverse_enumerate
from .virtualgraph import build_virtual


def _color(text: str, code: str, stream) -> str:
    if os.environ.get("NO_COLOR") or not getattr(stream, "isatty", lambda: False)():
        return text
    return f"\033[{code}m{text}\033[0m"


def _emit(text: str, output: Optional[str]) -> None:
    if output and output != "-":
        Path(output).write_text(text, encoding="utf-8")
    else:
        sys.stdout.write(text)


def _summary(obj: dict) -> None:
    sys.stderr.write(json.dumps(obj, sort_keys=True) + "\n")


def cmd_generate(args) -> int:
    g = generate(args.n, args.density, args.seed, connected=args.connected, weighted=args.weighted)
    _emit(instance.dumps(g), args.output)
    return 0


def cmd_explore(args) -> int:
    g = instance.load(args.input)
    if not (0 <= args.vertex < g.n):
        raise InstanceFormatError(f"vertex {args.vertex} out of range")
    k = args.k if args.k is not None else compute_pebble_budget(g).k
    trace = explore(g, args.vertex, k, max_iterations=iteration_cap(g, k))
    _emit(trace.jsonl(), args.output)
    _summary({"k": k, "max_pebbles": trace.max_pebbles, "states": len(trace.states), "visited": sorted(trace.visited)})
    return 0


def cmd_traverse(args) -> int:
    g = instance.load(args.input)
    result = traverse_enumerate(g, start=args.start, seed=args.seed)
    _emit(result.jsonl(), args.output)
    if args.svg:
        Path(args.svg).write_text(render(result.vg, result.reported_vertices()), encoding="utf-8")
    summary = result.metering()
    summary["offset"] = [format_rational(c) for c in result.offset]
    _summary(summary)
    return 0


def cmd_mst(args) -> int:
    g = instance.load(args.input)
    meter = MstMeter()
    chosen = min_spanning_tree(g, meter=meter)
    out = {
        "weights": [format_rational(w) for w in sorted(chosen)],
        "edges": [list(e) for e in resolve_edges(g, chosen)],
        "meter": {
            "next_weight_calls": meter.next_weight_calls,
            "discard_weight_calls": meter.discard_weight_calls,
        },
    }
    _emit(json.dumps(out, sort_keys=True) + "\n", args.output)
    return 0


def cmd_render(args) -> int:
    g = instance.load(args.input)
    dx, dy = general_position_offset(g.points, args.seed, g.edges())
    vg = build_virtual(translated(g, dx, dy))
    order = traverse_enumerate(g, seed=args.seed).reported_vertices() if args.order else None
    _emit(render(vg, order), args.output)
    return 0


def check_instance(seed: int, n_max: int) -> dict:
    """All oracles on one seeded instance; returns a JSON-ready row."""
    rng = random.Random(seed)
    n = rng.randint(2, n_max)
    g = generate(n, rng.uniform(6.0, 10.0), seed, connected=True, weighted=True)
    reports = []
    res = traverse_enumerate(g, seed=seed)
    reports.append(verify_enumeration(g, res.events))
    reports.append(verify_quasi_planar(res.vg))
    reports.append(verify_left_neighbor(res.vg))
    reports.append(verify_reconstruction(res.vg, g))
    v = rng.randrange(g.n)
    for k in (1, 2, 3):
        reports.append(verify_exploration(g, v, k, explore(g, v, k), iteration_cap(g, k)))
    mst_ok = min_spanning_tree(g) == kruskal(g)
    failed = [f"{r.name}: {r.details}" for r in reports if not r.passed]
    if not mst_ok:
        failed.append("mst: differs from kruskal")
    if g.n <= 10 and not check_cycle_lemma(g, kruskal(g)):
        failed.append("cycle property violated")
    return {"seed": seed, "n": g.n, "edges": g.num_edges(), "passed": not failed, "failures": failed}


def cmd_check(args) -> int:
    seeds = range(args.seed, args.seed + args.seeds)
    with ThreadPoolExecutor(max_workers=max(1, args.workers)) as pool:
        rows = list(pool.map(lambda s: check_instance(s, args.n_max), seeds))
    failed = [r for r in rows if not r["passed"]]
    out = {"instances": len(rows), "passed": len(rows) - len(failed), "failed": failed}
    _emit(json.dumps(out, sort_keys=True) + "\n", args.output)
    label = _color("PASS", "32", sys.stderr) if not failed else _color("FAIL", "31", sys.stderr)
    sys.stderr.write(f"{label} {out['passed']}/{out['instances']}\n")
    return 0 if not failed else 1


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="geotrav", description="Bounded-memory traversal of unit-disk graphs.")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("generate", help="write a seeded random instance")
    s.add_argument("--n", type=int, required=True)
    s.add_argument("--density", type=float, default=8.0, help="target expected degree")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--connected", action="store_true")
    s.add_argument("--weighted", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_generate)

    s = sub.add_parser("explore", help="pebble walk of the k-neighbourhood; JSONL trace")
    s.add_argument("input")
    s.add_argument("--vertex", type=int, default=0)
    s.add_argument("--k", type=int, help="defaults to the instance's pebble budget")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_explore)

    s = sub.add_parser("traverse", help="enumerate every vertex and edge once; JSONL events")
    s.add_argument("input")
    s.add_argument("--start", type=int, default=0)
    s.add_argument("--seed", type=int, default=0, help="seed for the general-position shift")
    s.add_argument("--svg", help="also write a drawing with the report order")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_traverse)

    s = sub.add_parser("mst", help="minimum spanning tree weights and edges as JSON")
    s.add_argument("input")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_mst)

    s = sub.add_parser("check", help="run every oracle over a seeded corpus")
    s.add_argument("--seeds", type=int, default=20)
    s.add_argument("--seed", type=int, default=0, help="first seed")
    s.add_argument("--n-max", type=int, default=40)
    s.add_argument("--workers", type=int, default=1)
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_check)

    s = sub.add_parser("render", help="SVG of the virtual graph")
    s.add_argument("input")
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--order", action="store_true", help="label vertices with their report order")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_render)
    return p


def main(argv: Optional[Sequence[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except GeoTravError as exc:
        sys.stderr.write(json.dumps({"error": exc.code, "message": str(exc)}) + "\n")
        return 2


if __name__ == "__main__":  # pragma: no cover
    sys.exit(main())

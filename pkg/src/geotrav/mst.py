"""Minimum spanning tree by increasing weight, driven by two scans.

``next_weight`` reads edge weights off a traversal enumeration and keeps a
single tentative-minimum register; ``discard_weight`` walks the component of
one endpoint in the subgraph of strictly lighter edges and stops as soon as
the other endpoint shows up. The tree is returned as its set of weights.
"""
from __future__ import annotations

import math
import weakref
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

import numpy as np

from .errors import Disconnected, InvalidWeight, NoSuchWeight, TooLarge
from .geograph import GeometricGraph, edge_key, is_connected
from .traversal import traverse_enumerate

_scans: "weakref.WeakKeyDictionary[GeometricGraph, EdgeScan]" = weakref.WeakKeyDictionary()


@dataclass
class MstMeter:
    next_weight_calls: int = 0
    discard_weight_calls: int = 0
    edges_scanned: int = 0
    max_stack: int = 0


@dataclass(frozen=True)
class EdgeScan:
    """Edges in the order a traversal reports them, with their weights
    rescaled by one common denominator so scans compare plain integers."""

    edges: tuple[tuple[int, int], ...]
    scaled: np.ndarray | None
    denominator: int
    by_edge: dict[tuple[int, int], int]


def _make_scan(g: GeometricGraph) -> EdgeScan:
    weights = _require_weights(g)
    edges = tuple(traverse_enumerate(g).reported_edges()) if g.num_edges() else ()
    den = 1
    for w in weights.values():
        den = math.lcm(den, w.denominator)
    by_edge = {e: w.numerator * (den // w.denominator) for e, w in weights.items()}
    ints = [by_edge[e] for e in edges]
    scaled = np.array(ints, dtype=np.int64) if all(abs(x) < (1 << 62) for x in ints) else None
    return EdgeScan(edges, scaled, den, by_edge)


def edge_scan(g: GeometricGraph, replay: bool = True) -> EdgeScan:
    """The traversal enumeration of ``g``. With ``replay`` the first traversal
    is cached and replayed; otherwise it is rerun on every call."""
    if not replay:
        return _make_scan(g)
    scan = _scans.get(g)
    if scan is None:
        scan = _scans[g] = _make_scan(g)
    return scan


def enumerated_edges(g: GeometricGraph, replay: bool = True) -> tuple[tuple[int, int], ...]:
    return edge_scan(g, replay).edges


def _require_weights(g: GeometricGraph) -> dict[tuple[int, int], Fraction]:
    if g.weights is None:
        raise InvalidWeight("graph carries no weights")
    return g.weights


def _scaled(scan: EdgeScan, w: Fraction) -> Optional[int]:
    x = w * scan.denominator
    return x.numerator if x.denominator == 1 else None


def next_weight(g: GeometricGraph, w, replay: bool = True, meter: Optional[MstMeter] = None) -> Fraction:
    """Smallest edge weight above ``w``, or 0 when there is none."""
    weights = _require_weights(g)
    w = Fraction(w)
    scan = edge_scan(g, replay)
    if meter is not None:
        meter.next_weight_calls += 1
        meter.edges_scanned += len(scan.edges)
    ws = _scaled(scan, w)
    if scan.scaled is not None and ws is not None:
        heavier = scan.scaled[scan.scaled > ws]
        return Fraction(int(heavier.min()), scan.denominator) if heavier.size else Fraction(0)
    best = Fraction(0)
    for e in scan.edges:
        x = weights[e]
        if x > w and (best == 0 or x < best):
            best = x
    return best


def edge_of_weight(g: GeometricGraph, w) -> tuple[int, int]:
    weights = _require_weights(g)
    w = Fraction(w)
    scan = edge_scan(g)
    ws = _scaled(scan, w)
    if scan.scaled is not None:
        hits = np.flatnonzero(scan.scaled == ws) if ws is not None else ()
        if len(hits):
            return scan.edges[int(hits[0])]
    else:
        for e in scan.edges:
            if weights[e] == w:
                return e
    raise NoSuchWeight(f"no edge has weight {w}")


def discard_weight(g: GeometricGraph, w, meter: Optional[MstMeter] = None) -> int:
    """1 when the endpoints of the weight-``w`` edge are joined by a path of
    strictly lighter edges, else 0."""
    w = Fraction(w)
    scan = edge_scan(g)
    s, t = edge_of_weight(g, w)
    limit = scan.by_edge[(s, t)]
    by_edge = scan.by_edge
    seen = {s}
    stack = [s]
    found = 0
    while stack:
        u = stack.pop()
        for x in g.adjacency[u]:  # rotation order
            if x in seen or by_edge[(u, x) if u < x else (x, u)] >= limit:
                continue
            if x == t:
                found = 1
                stack.clear()
                break
            seen.add(x)
            stack.append(x)
        if meter is not None:
            meter.max_stack = max(meter.max_stack, len(stack))
    if meter is not None:
        meter.discard_weight_calls += 1
    return found


def min_spanning_tree(g: GeometricGraph, replay: bool = True, meter: Optional[MstMeter] = None) -> set[Fraction]:
    """Weight set of the minimum spanning tree, following the increasing-weight
    loop: admit the lightest weight, then every later weight that is not
    discarded."""
    _require_weights(g)
    if not is_connected(g):
        raise Disconnected("graph is not connected")
    x = next_weight(g, 0, replay, meter)
    if x == 0:
        return set()
    chosen = {x}
    while x != 0:
        nxt = next_weight(g, x, replay, meter)
        if nxt == 0:
            return chosen
        x = nxt
        if discard_weight(g, x, meter) == 0:
            chosen.add(x)
    return chosen


def resolve_edges(g: GeometricGraph, chosen) -> list[tuple[int, int]]:
    weights = _require_weights(g)
    wanted = set(Fraction(w) for w in chosen)
    return sorted(e for e, w in weights.items() if w in wanted)


def check_cycle_lemma(g: GeometricGraph, chosen) -> bool:
    """An edge is left out of the tree exactly when some cycle through it uses
    only edges no heavier than it. Cycles are found by exhaustive simple-path
    search, so this is limited to 10 vertices."""
    if g.n > 10:
        raise TooLarge(f"cycle enumeration is limited to 10 vertices, got {g.n}")
    weights = _require_weights(g)
    chosen = set(Fraction(w) for w in chosen)
    for (u, v), w in weights.items():
        excluded = w not in chosen
        if excluded != _light_cycle_through(g, weights, u, v, w):
            return False
    return True


def _light_cycle_through(g, weights, u, v, w) -> bool:
    # simple paths from u to v avoiding edge uv with every weight <= w
    def extend(x, on_path):
        for y in g.adjacency[x]:
            if y in on_path or (x, y) in ((u, v), (v, u)) or weights[edge_key(x, y)] > w:
                continue
            if y == v:
                return True
            on_path.add(y)
            if extend(y, on_path):
                return True
            on_path.discard(y)
        return False

    return extend(u, {u})

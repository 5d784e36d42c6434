"""Unit-disk geometric graphs, their rotation systems and pebble budgets."""
from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from . import _kernels
from .errors import (
    Disconnected,
    DuplicatePoint,
    InvalidArc,
    InvalidWeight,
    NonInjectiveWeights,
    TooSmall,
)
from .geometry import (
    Point,
    ccw_sort_indices,
    lattice_points_on_segment,
    point_on_segment,
    squared_distance,
)

EAST = (1, 0)


class Arc(NamedTuple):
    tail: int
    head: int


def rev(e: Arc) -> Arc:
    return Arc(e[1], e[0])


def edge_key(u: int, v: int) -> tuple[int, int]:
    return (u, v) if u < v else (v, u)


@dataclass(eq=False)
class GeometricGraph:
    """Straight-line graph on distinct rational points.

    ``adjacency[v]`` lists the neighbours of ``v`` in counterclockwise order,
    starting from the +x direction. ``weights`` maps ``(min, max)`` vertex
    pairs to positive rationals.
    """

    points: tuple[Point, ...]
    adjacency: tuple[tuple[int, ...], ...]
    weights: dict[tuple[int, int], Fraction] | None = None
    unit_disk: bool = True
    _slot: list[dict[int, int]] = field(init=False, repr=False)
    _nbrs: list[frozenset[int]] = field(init=False, repr=False)

    def __post_init__(self):
        self._slot = [{w: i for i, w in enumerate(nbrs)} for nbrs in self.adjacency]
        self._nbrs = [frozenset(nbrs) for nbrs in self.adjacency]

    @property
    def n(self) -> int:
        return len(self.points)

    def degree(self, v: int) -> int:
        return len(self.adjacency[v])

    def neighbors(self, v: int) -> frozenset[int]:
        return self._nbrs[v]

    def has_edge(self, u: int, v: int) -> bool:
        return v in self._nbrs[u]

    def edges(self) -> list[tuple[int, int]]:
        return sorted((u, v) for u, nbrs in enumerate(self.adjacency) for v in nbrs if u < v)

    def num_edges(self) -> int:
        return sum(len(a) for a in self.adjacency) // 2

    def arcs(self) -> Iterable[Arc]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                yield Arc(u, v)

    def weight(self, u: int, v: int) -> Fraction:
        if self.weights is None:
            raise InvalidWeight("graph carries no weights")
        return self.weights[edge_key(u, v)]

    def slot(self, v: int, w: int) -> int:
        try:
            return self._slot[v][w]
        except (KeyError, IndexError):
            raise InvalidArc(f"({v}, {w}) is not an arc") from None

    def check_arc(self, e) -> None:
        u, v = e
        if not (0 <= u < self.n) or v not in self._slot[u]:
            raise InvalidArc(f"{tuple(e)} is not an arc of the graph")


# --------------------------------------------------------------------------
# rotation system
# --------------------------------------------------------------------------

def rotation_succ(g: GeometricGraph, e) -> Arc:
    """First arc out of head(e) counterclockwise after rev(e)."""
    u, v = e
    nbrs = g.adjacency[v]
    i = g.slot(v, u)
    return Arc(v, nbrs[(i + 1) % len(nbrs)])


def rotation_pred(g: GeometricGraph, e) -> Arc:
    v, w = e
    nbrs = g.adjacency[v]
    i = g.slot(v, w)
    return Arc(nbrs[(i - 1) % len(nbrs)], v)


def next_around(g: GeometricGraph, e) -> Arc:
    """Arc out of tail(e) immediately counterclockwise after e."""
    u, v = e
    nbrs = g.adjacency[u]
    i = g.slot(u, v)
    return Arc(u, nbrs[(i + 1) % len(nbrs)])


def first_arc(g: GeometricGraph, v: int) -> Arc:
    """Arc out of ``v`` with the smallest counterclockwise angle from +x."""
    return Arc(v, g.adjacency[v][0])


# --------------------------------------------------------------------------
# construction
# --------------------------------------------------------------------------

def scaled_coordinates(points: Sequence[Point]):
    """Integer arrays ``X, Y`` and scale ``D`` with ``X = x * D`` exactly, or
    ``None`` when the magnitudes would not fit the int64 kernels."""
    den = 1
    for p in points:
        den = math.lcm(den, p.x.denominator, p.y.denominator)
    if den >= _kernels.SAFE_COORD:
        return None
    xs = [int(p.x * den) for p in points]
    ys = [int(p.y * den) for p in points]
    # shifting keeps differences exact and shrinks magnitudes
    sx, sy = min(xs, default=0), min(ys, default=0)
    xs = [x - sx for x in xs]
    ys = [y - sy for y in ys]
    if max(xs + ys, default=0) >= _kernels.SAFE_COORD:
        return None
    return np.array(xs, dtype=np.int64), np.array(ys, dtype=np.int64), den


def _unit_disk_pairs(points: Sequence[Point]) -> list[tuple[int, int]]:
    scaled = scaled_coordinates(points)
    if scaled is not None:
        X, Y, den = scaled
        I, J = _kernels.unit_disk_edges(X, Y, den * den)
        return list(zip(I.tolist(), J.tolist()))
    one = Fraction(1)
    return [
        (i, j)
        for i in range(len(points))
        for j in range(i + 1, len(points))
        if squared_distance(points[i], points[j]) <= one
    ]


def _normalize_weights(n: int, edges: set[tuple[int, int]], weights) -> dict[tuple[int, int], Fraction] | None:
    if weights is None:
        return None
    out: dict[tuple[int, int], Fraction] = {}
    items = weights.items() if isinstance(weights, dict) else weights
    for key, w in items:
        u, v = key
        k = edge_key(int(u), int(v))
        if k not in edges:
            raise InvalidWeight(f"weight given for non-edge {k}")
        w = Fraction(w)
        if w <= 0:
            raise InvalidWeight(f"weight {w} of edge {k} is not positive")
        out[k] = w
    missing = edges - out.keys()
    if missing:
        raise InvalidWeight(f"{len(missing)} edges carry no weight, e.g. {min(missing)}")
    if len(set(out.values())) != len(out):
        raise NonInjectiveWeights("edge weights must be pairwise distinct")
    return out


def _assemble(points, pairs, weights, unit_disk) -> GeometricGraph:
    n = len(points)
    if len(set(points)) != n:
        seen = {}
        for i, p in enumerate(points):
            if p in seen:
                raise DuplicatePoint(f"vertices {seen[p]} and {i} coincide at {tuple(p)}")
            seen[p] = i
    nbrs: list[list[int]] = [[] for _ in range(n)]
    for u, v in pairs:
        nbrs[u].append(v)
        nbrs[v].append(u)
    adjacency = []
    for v in range(n):
        order = ccw_sort_indices(points[v], EAST, [points[w] for w in nbrs[v]])
        adjacency.append(tuple(nbrs[v][i] for i in order))
    edge_set = {edge_key(u, v) for u, v in pairs}
    return GeometricGraph(tuple(points), tuple(adjacency), _normalize_weights(n, edge_set, weights), unit_disk)


def build_unit_disk_graph(points: Iterable, weights=None) -> GeometricGraph:
    """Edge between every pair of distinct points at Euclidean distance <= 1."""
    pts = [p if isinstance(p, Point) else Point.of(*p) for p in points]
    if len(set(pts)) != len(pts):
        _assemble(pts, [], None, True)  # raises DuplicatePoint
    return _assemble(pts, _unit_disk_pairs(pts), weights, True)


def graph_from_edges(points: Iterable, edges: Iterable, weights=None) -> GeometricGraph:
    """Straight-line drawing with an explicit edge list (not necessarily unit-disk)."""
    pts = [p if isinstance(p, Point) else Point.of(*p) for p in points]
    pairs = set()
    for u, v in edges:
        u, v = int(u), int(v)
        if u == v or not (0 <= u < len(pts) and 0 <= v < len(pts)):
            raise InvalidArc(f"bad edge ({u}, {v})")
        pairs.add(edge_key(u, v))
    one = Fraction(1)
    unit = all(squared_distance(pts[u], pts[v]) <= one for u, v in pairs) and set(pairs) == set(_unit_disk_pairs(pts))
    return _assemble(pts, sorted(pairs), weights, unit)


# --------------------------------------------------------------------------
# distances and the pebble budget
# --------------------------------------------------------------------------

def hop_distances(g: GeometricGraph) -> np.ndarray:
    """All-pairs BFS distance matrix; -1 marks unreachable pairs."""
    indptr, indices = _kernels.csr(g.adjacency)
    return _kernels.bfs_distances(indptr, indices)


def is_connected(g: GeometricGraph) -> bool:
    if g.n == 0:
        return True
    seen = {0}
    stack = [0]
    while stack:
        u = stack.pop()
        for w in g.adjacency[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return len(seen) == g.n


@dataclass(frozen=True)
class PebbleBudget:
    r_squared_bound: Fraction
    k: int
    qualifying_pairs: bool = True

    @property
    def pebbles(self) -> int:
        return self.k + 1


def budget_from_r_squared(r2: Fraction, qualifying: bool = True) -> PebbleBudget:
    # floor(sqrt(x)) == isqrt(floor(x)) for x >= 0
    k = math.isqrt(math.floor(8 * r2))
    return PebbleBudget(Fraction(r2), k, qualifying)


def compute_pebble_budget(g: GeometricGraph, dist: np.ndarray | None = None) -> PebbleBudget:
    """r(G)^2 as the largest d_G^2 / d_E^2 over pairs with 1 < d_E^2 < 8, and
    k = floor(2 * sqrt(2) * r(G)) computed as an exact integer square root."""
    if g.n < 2:
        raise TooSmall("the pebble budget needs at least two vertices")
    if dist is None:
        dist = hop_distances(g)
    if (dist < 0).any():
        raise Disconnected("graph is not connected")
    best: Fraction | None = None
    scaled = scaled_coordinates(g.points)
    if scaled is not None:
        X, Y, den = scaled
        d2 = den * den
        mins = _kernels.min_sqdist_by_hops(X, Y, dist, d2, 8 * d2)
        for hops in np.nonzero(mins >= 0)[0].tolist():
            ratio = Fraction(hops * hops * d2, int(mins[hops]))
            if best is None or ratio > best:
                best = ratio
    else:
        one, eight = Fraction(1), Fraction(8)
        for i in range(g.n):
            for j in range(i + 1, g.n):
                s = squared_distance(g.points[i], g.points[j])
                if one < s < eight:
                    ratio = Fraction(int(dist[i, j]) ** 2) / s
                    if best is None or ratio > best:
                        best = ratio
    if best is None:
        return budget_from_r_squared(Fraction(1), qualifying=False)
    return budget_from_r_squared(best)


# --------------------------------------------------------------------------
# general position with respect to the integer lattice
# --------------------------------------------------------------------------

def square_corner(p) -> tuple[int, int]:
    return (math.floor(p[0]), math.floor(p[1]))


def general_position_violations(points: Sequence[Point], edges: Iterable[tuple[int, int]]) -> list[str]:
    """Reasons the drawing is not in general position w.r.t. the lattice:
    integer coordinates, edges through lattice points, connectors through
    vertices. Empty when everything is fine."""
    out = []
    for i, p in enumerate(points):
        if p.x.denominator == 1 or p.y.denominator == 1:
            out.append(f"vertex {i} has an integer coordinate")
    if out:
        return out
    for u, v in edges:
        if square_corner(points[u]) == square_corner(points[v]):
            continue  # an open unit square holds no lattice point
        hits = lattice_points_on_segment(points[u], points[v])
        if hits:
            out.append(f"edge ({u}, {v}) passes through lattice point {hits[0]}")
    by_square: dict[tuple[int, int], list[int]] = {}
    for i, p in enumerate(points):
        by_square.setdefault(square_corner(p), []).append(i)
    for corner, members in by_square.items():
        if len(members) < 2:
            continue
        for v in members:
            for u in members:
                if u != v and point_on_segment(points[v], corner, points[u]):
                    out.append(f"connector of vertex {v} passes through vertex {u}")
    return out


def _offsets(seed: int):
    rng = random.Random(seed)
    attempt = 0
    while True:
        digits = 3 + attempt // 4
        scale = 10**digits
        yield Fraction(rng.randrange(1, scale), scale), Fraction(rng.randrange(1, scale), scale)
        attempt += 1


def general_position_offset(points: Sequence[Point], seed: int = 0, edges=None) -> tuple[Fraction, Fraction]:
    """Translation vector that puts the drawing in general position ((0, 0)
    when it already is). Translation preserves every pairwise distance."""
    pts = [p if isinstance(p, Point) else Point.of(*p) for p in points]
    if edges is None:
        edges = _unit_disk_pairs(pts)
    edges = list(edges)
    if not general_position_violations(pts, edges):
        return Fraction(0), Fraction(0)
    for dx, dy in _offsets(seed):
        moved = [Point(p.x + dx, p.y + dy) for p in pts]
        if not general_position_violations(moved, edges):
            return dx, dy
    raise AssertionError("unreachable")  # pragma: no cover


def ensure_general_position(points: Sequence, seed: int = 0, edges=None) -> list[Point]:
    pts = [p if isinstance(p, Point) else Point.of(*p) for p in points]
    dx, dy = general_position_offset(pts, seed, edges)
    if dx == 0 and dy == 0:
        return pts
    return [Point(p.x + dx, p.y + dy) for p in pts]


def translated(g: GeometricGraph, dx: Fraction, dy: Fraction) -> GeometricGraph:
    """Same combinatorics, every point shifted; rotation lists are unchanged."""
    if dx == 0 and dy == 0:
        return g
    pts = tuple(Point(p.x + dx, p.y + dy) for p in g.points)
    return GeometricGraph(pts, g.adjacency, g.weights, g.unit_disk)

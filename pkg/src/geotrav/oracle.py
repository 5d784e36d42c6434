"""Brute-force reference checks.

Nothing here calls the modules being checked: adjacency is rebuilt from raw
edge lists or coordinates, and the geometric tests use their own exact
arithmetic. Inputs are read through plain attributes only, so hand-built
corrupted objects can be fed in as negative controls.
"""
from __future__ import annotations

import math
from collections import Counter, deque
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from .errors import Disconnected


@dataclass(frozen=True)
class OracleReport:
    name: str
    passed: bool
    details: str = ""

    def __bool__(self) -> bool:
        return self.passed


def _adjacency(g) -> list[set[int]]:
    return [set(nbrs) for nbrs in g.adjacency]


def _edge_set(g) -> set[tuple[int, int]]:
    return {(min(u, v), max(u, v)) for u, nbrs in enumerate(g.adjacency) for v in nbrs}


def unit_disk_edge_set(points) -> set[tuple[int, int]]:
    out = set()
    for i, j in combinations(range(len(points)), 2):
        dx = Fraction(points[i][0]) - Fraction(points[j][0])
        dy = Fraction(points[i][1]) - Fraction(points[j][1])
        if dx * dx + dy * dy <= 1:
            out.add((i, j))
    return out


def bfs_neighborhood(g, v: int, k: int) -> set[int]:
    adj = _adjacency(g)
    depth = {v: 0}
    queue = deque([v])
    while queue:
        u = queue.popleft()
        if depth[u] == k:
            continue
        for w in adj[u]:
            if w not in depth:
                depth[w] = depth[u] + 1
                queue.append(w)
    return set(depth)


def is_induced_path(g, seq, adj=None) -> bool:
    if adj is None:
        adj = _adjacency(g)
    if len(set(seq)) != len(seq):
        return False
    for i, a in enumerate(seq):
        for j in range(i + 1, len(seq)):
            if (seq[j] in adj[a]) != (j == i + 1):
                return False
    return True


def has_induced_path(g, v: int, length: int, adj=None) -> bool:
    """Is there an induced path with ``length`` edges starting at ``v``?"""
    if adj is None:
        adj = _adjacency(g)

    def grow(path, blocked):
        if len(path) == length + 1:
            return True
        tip = path[-1]
        for w in adj[tip]:
            if w in blocked:
                continue
            # w may touch only the tip among the path vertices
            if any(w in adj[x] for x in path[:-1]):
                continue
            if grow(path + [w], blocked | {w}):
                return True
        return False

    return grow([v], {v})


def verify_exploration(g, v: int, k: int, trace, cap: int | None = None) -> OracleReport:
    """Induced path at every state, pairwise distinct states, termination,
    exact coverage and the pebble budget."""
    name = f"exploration(v={v}, k={k})"
    if not trace.terminated:
        return OracleReport(name, False, "did not terminate")
    if cap is not None and len(trace.states) > cap:
        return OracleReport(name, False, f"{len(trace.states)} states exceed the cap {cap}")
    adj = _adjacency(g)
    seen = set()
    peak = 1
    for i, s in enumerate(trace.states, 1):
        P = tuple(s.pebbled)
        key = (P, tuple(s.arc), s.mode)
        if key in seen:
            return OracleReport(name, False, f"state {i} repeats an earlier state")
        seen.add(key)
        if P[0] != v or not is_induced_path(g, P, adj):
            return OracleReport(name, False, f"state {i}: {list(P)} is not an induced path from {v}")
        if s.arc[1] != P[-1] and s.arc[0] != P[-1]:
            return OracleReport(name, False, f"state {i}: arc {tuple(s.arc)} does not touch the frontier")
        peak = max(peak, len(P))
    visited = set(trace.visited)
    expected = bfs_neighborhood(g, v, k)
    if visited != expected:
        return OracleReport(name, False, f"missing {sorted(expected - visited)}, extra {sorted(visited - expected)}")
    if peak > k + 1:
        return OracleReport(name, False, f"{peak} pebbles used with k = {k}")
    if peak != k + 1 and has_induced_path(g, v, k, adj):
        return OracleReport(name, False, f"induced {k}-path exists but only {peak} pebbles used")
    return OracleReport(name, True)


def kruskal(g) -> set[Fraction]:
    """Classical sorted-edge MST with union-find; returns the weight set."""
    n = len(g.points)
    parent = list(range(n))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    chosen = set()
    for (u, v), w in sorted(g.weights.items(), key=lambda item: item[1]):
        ru, rv = find(u), find(v)
        if ru != rv:
            parent[ru] = rv
            chosen.add(Fraction(w))
    if len({find(x) for x in range(n)}) > 1:
        raise Disconnected("graph is not connected")
    return chosen


def verify_enumeration(g, events) -> OracleReport:
    vertices: Counter = Counter()
    edges: Counter = Counter()
    for ev in events:
        kind = getattr(ev.kind, "value", ev.kind)
        if kind == "report_vertex":
            vertices[ev.vertex] += 1
        elif kind == "report_edge":
            u, v = ev.edge
            edges[(min(u, v), max(u, v))] += 1
    problems = []
    for v in range(len(g.points)):
        if vertices[v] != 1:
            problems.append(f"vertex {v} reported {vertices[v]} times")
    for v in vertices:
        if not (0 <= v < len(g.points)):
            problems.append(f"non-vertex {v} reported")
    want = _edge_set(g)
    for e in want:
        if edges[e] != 1:
            problems.append(f"edge {e} reported {edges[e]} times")
    for e in edges:
        if e not in want:
            problems.append(f"non-edge {e} reported")
    return OracleReport("enumeration", not problems, "; ".join(problems[:5]))


# ---- virtual graph checks ------------------------------------------------

def _orient(a, b, c) -> int:
    s = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    return (s > 0) - (s < 0)


def _between(a, b, p) -> bool:
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def segments_meet(a, b, c, d) -> bool:
    """Closed segments ab and cd share at least one point."""
    o1, o2, o3, o4 = _orient(a, b, c), _orient(a, b, d), _orient(c, d, a), _orient(c, d, b)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return (
        (o1 == 0 and _between(a, b, c))
        or (o2 == 0 and _between(a, b, d))
        or (o3 == 0 and _between(c, d, a))
        or (o4 == 0 and _between(c, d, b))
    )


def verify_quasi_planar(vg) -> OracleReport:
    """No lattice edge meets any other edge except at a shared endpoint."""
    pts = vg.points
    lattice, others = [], []
    for (u, v), kind in vg.edge_kinds.items():
        (lattice if getattr(kind, "value", kind) == "lattice" else others).append((u, v))
    buckets: dict[tuple[int, int], list[tuple[int, int]]] = {}
    for u, v in others:
        a, b = pts[u], pts[v]
        for i in range(math.floor(min(a[0], b[0])), math.floor(max(a[0], b[0])) + 1):
            for j in range(math.floor(min(a[1], b[1])), math.floor(max(a[1], b[1])) + 1):
                buckets.setdefault((i, j), []).append((u, v))
    for u, v in lattice:
        a, b = pts[u], pts[v]
        near = set()
        for i in range(int(min(a[0], b[0])) - 1, int(max(a[0], b[0])) + 1):
            for j in range(int(min(a[1], b[1])) - 1, int(max(a[1], b[1])) + 1):
                near.update(buckets.get((i, j), ()))
        for x, y in near:
            c, d = pts[x], pts[y]
            if not segments_meet(a, b, c, d):
                continue
            shared = {u, v} & {x, y}
            if shared:
                s = shared.pop()
                other = y if x == s else x
                far = v if u == s else u
                # touching only at the shared endpoint is allowed
                if not (_orient(pts[s], pts[far], pts[other]) == 0 and _between(pts[s], pts[far], pts[other])) and not (
                    _orient(pts[s], pts[other], pts[far]) == 0 and _between(pts[s], pts[other], pts[far])
                ):
                    continue
            return OracleReport("quasi_planar", False, f"lattice edge {(u, v)} meets edge {(x, y)}")
    return OracleReport("quasi_planar", True)


def verify_left_neighbor(vg) -> OracleReport:
    """Every real vertex has a connector to a point with smaller x."""
    pts = vg.points
    for v in range(vg.n_real):
        ok = False
        for w in vg.adjacency[v]:
            kind = vg.edge_kinds.get((min(v, w), max(v, w)))
            if getattr(kind, "value", kind) == "connector" and pts[w][0] < pts[v][0]:
                ok = True
                break
        if not ok:
            return OracleReport("left_neighbor", False, f"vertex {v} has no connector to its left")
    return OracleReport("left_neighbor", True)


def verify_reconstruction(vg, g) -> OracleReport:
    """Crossing edges and retained graph edges partition E(G)."""
    retained = {e for e, kind in vg.edge_kinds.items() if getattr(kind, "value", kind) == "graph"}
    crossing = {(min(u, v), max(u, v)) for u, v in vg.crossing}
    want = _edge_set(g)
    if retained & crossing:
        return OracleReport("reconstruction", False, f"edges both kept and crossing: {sorted(retained & crossing)[:3]}")
    if retained | crossing != want:
        return OracleReport("reconstruction", False, f"symmetric difference {sorted((retained | crossing) ^ want)[:3]}")
    for u, v in crossing:
        a, b = vg.points[u], vg.points[v]
        if (math.floor(a[0]), math.floor(a[1])) == (math.floor(b[0]), math.floor(b[1])):
            return OracleReport("reconstruction", False, f"crossing edge {(u, v)} stays inside one square")
    return OracleReport("reconstruction", True)

"""The graph G combined with the lattice backbone L_G.

Vertex ids ``0..n-1`` are the real vertices of G; lattice points follow.
Edges come in three kinds: retained graph edges (both endpoints in one open
unit square), lattice edges (sides of occupied squares) and connectors
(each real vertex to the lower-left corner of its square). Graph edges whose
endpoints sit in different squares cross the lattice; they are kept aside in
``crossing`` and reported through their endpoints instead of being walked.

Faces of the backbone are the orbits of the successor map restricted to
lattice arcs. A face lies to the right of each of its arcs, so bounded faces
are walked clockwise and the outer face counterclockwise.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Optional

from .errors import Disconnected, GeneralPositionViolation, InvalidArc, OnLattice
from .geograph import EAST, Arc, GeometricGraph, edge_key, general_position_violations, rev
from .geometry import Point, ccw_sort_indices


class VertexKind(enum.Enum):
    REAL = "real"
    LATTICE = "lattice"


class EdgeKind(enum.Enum):
    GRAPH = "graph"
    LATTICE = "lattice"
    CONNECTOR = "connector"


@dataclass(frozen=True, order=True)
class LatticeFace:
    """Open unit square whose lower-left corner is ``corner``."""

    corner: tuple[int, int]

    def corners(self) -> tuple[tuple[int, int], ...]:
        i, j = self.corner
        return ((i, j), (i + 1, j), (i + 1, j + 1), (i, j + 1))


@dataclass(frozen=True)
class BackboneFace:
    index: int
    arcs: tuple[Arc, ...]
    entry: Arc
    square: Optional[LatticeFace]
    outer: bool
    occupied: bool


def square_of(p) -> LatticeFace:
    x, y = Fraction(p[0]), Fraction(p[1])
    if x.denominator == 1 or y.denominator == 1:
        raise OnLattice(f"point ({x}, {y}) lies on a lattice line")
    return LatticeFace((math.floor(x), math.floor(y)))


def arc_key(vg: "VirtualGraph", u: int, v: int) -> tuple:
    """Total order on undirected edges: the lexicographically smaller endpoint
    first, then the larger one."""
    a, b = vg.points[u], vg.points[v]
    return (a, b) if (a.x, a.y) < (b.x, b.y) else (b, a)


def cells_beside(a: tuple[int, int], b: tuple[int, int]) -> tuple[tuple[int, int], tuple[int, int]]:
    """The two unit cells sharing the lattice edge ab."""
    (x0, y0), (x1, y1) = min(a, b), max(a, b)
    if y0 == y1:
        return (x0, y0), (x0, y0 - 1)
    return (x0, y0), (x0 - 1, y0)


@dataclass(eq=False)
class VirtualGraph:
    graph: GeometricGraph
    points: list[Point]
    kinds: list[VertexKind]
    lattice_ids: dict[tuple[int, int], int]
    edge_kinds: dict[tuple[int, int], EdgeKind]
    adjacency: list[tuple[int, ...]]
    crossing: list[tuple[int, int]]
    squares: list[tuple[int, int]]
    vertex_square: list[tuple[int, int]]
    _slot: list[dict[int, int]] = field(init=False, repr=False)
    _lat_adj: list[tuple[int, ...]] = field(init=False, repr=False)
    _lat_slot: list[dict[int, int]] = field(init=False, repr=False)
    _crossing_by_vertex: dict[int, list[int]] = field(init=False, repr=False)
    _faces: list[BackboneFace] = field(init=False, repr=False)
    _face_of: dict[Arc, int] = field(init=False, repr=False)
    _occupied: frozenset = field(init=False, repr=False)

    def __post_init__(self):
        self._slot = [{w: i for i, w in enumerate(a)} for a in self.adjacency]
        self._lat_adj = [
            tuple(w for w in a if self.edge_kinds[edge_key(v, w)] is EdgeKind.LATTICE) for v, a in enumerate(self.adjacency)
        ]
        self._lat_slot = [{w: i for i, w in enumerate(a)} for a in self._lat_adj]
        self._crossing_by_vertex = {}
        for u, v in self.crossing:
            self._crossing_by_vertex.setdefault(u, []).append(v)
            self._crossing_by_vertex.setdefault(v, []).append(u)
        self._occupied = frozenset(self.squares)
        self._build_faces()

    # ---- basic queries -------------------------------------------------

    @property
    def n_real(self) -> int:
        return self.graph.n

    @property
    def size(self) -> int:
        return len(self.points)

    def is_real(self, v: int) -> bool:
        return v < self.graph.n

    def lattice_point(self, v: int) -> tuple[int, int]:
        p = self.points[v]
        return (int(p.x), int(p.y))

    def kind(self, u: int, v: int) -> EdgeKind:
        try:
            return self.edge_kinds[edge_key(u, v)]
        except KeyError:
            raise InvalidArc(f"({u}, {v}) is not an edge of the virtual graph") from None

    def edges(self, kind: EdgeKind | None = None) -> list[tuple[int, int]]:
        return sorted(e for e, k in self.edge_kinds.items() if kind is None or k is kind)

    def arcs(self) -> Iterable[Arc]:
        for u, nbrs in enumerate(self.adjacency):
            for v in nbrs:
                yield Arc(u, v)

    def num_arcs(self) -> int:
        return 2 * len(self.edge_kinds)

    def crossing_partners(self, v: int) -> list[int]:
        return self._crossing_by_vertex.get(v, [])

    def is_occupied(self, cell: tuple[int, int]) -> bool:
        return cell in self._occupied

    # ---- rotation system -----------------------------------------------

    def succ(self, e) -> Arc:
        u, v = e
        try:
            i = self._slot[v][u]
        except KeyError:
            raise InvalidArc(f"{tuple(e)} is not an arc of the virtual graph") from None
        nbrs = self.adjacency[v]
        return Arc(v, nbrs[(i + 1) % len(nbrs)])

    def pred(self, e) -> Arc:
        v, w = e
        try:
            i = self._slot[v][w]
        except KeyError:
            raise InvalidArc(f"{tuple(e)} is not an arc of the virtual graph") from None
        nbrs = self.adjacency[v]
        return Arc(nbrs[(i - 1) % len(nbrs)], v)

    def lattice_succ(self, e) -> Arc:
        """Successor in the backbone alone (connectors and graph edges ignored)."""
        u, v = e
        nbrs = self._lat_adj[v]
        return Arc(v, nbrs[(self._lat_slot[v][u] + 1) % len(nbrs)])

    # ---- faces ---------------------------------------------------------

    def _build_faces(self) -> None:
        self._faces = []
        self._face_of = {}
        for v in range(self.n_real, self.size):
            for w in self._lat_adj[v]:
                start = Arc(v, w)
                if start in self._face_of:
                    continue
                orbit = [start]
                e = self.lattice_succ(start)
                while e != start:
                    orbit.append(e)
                    e = self.lattice_succ(e)
                idx = len(self._faces)
                for a in orbit:
                    self._face_of[a] = idx
                self._faces.append(self._make_face(idx, orbit))

    def _make_face(self, idx: int, orbit: list[Arc]) -> BackboneFace:
        twice_area = 0
        for a in orbit:
            (x0, y0), (x1, y1) = self.lattice_point(a[0]), self.lattice_point(a[1])
            twice_area += x0 * y1 - x1 * y0
        entry_edge = min(orbit, key=lambda a: arc_key(self, a[0], a[1]))
        outer = twice_area > 0
        square = None
        if twice_area == -2 and len(orbit) == 4:
            square = LatticeFace(min(self.lattice_point(a[0]) for a in orbit))
        occupied = square is not None and square.corner in self._occupied
        return BackboneFace(idx, tuple(orbit), entry_edge, square, outer, occupied)

    def faces(self) -> list[BackboneFace]:
        return list(self._faces)

    def face_index(self, e) -> int:
        """Backbone face lying to the right of lattice arc ``e``."""
        try:
            return self._face_of[Arc(*e)]
        except KeyError:
            raise InvalidArc(f"{tuple(e)} is not a lattice arc") from None

    def face_of_arc(self, e) -> BackboneFace:
        return self._faces[self.face_index(e)]

    def is_entry(self, e) -> bool:
        """True when ``e`` is a lattice arc and the entry of the face on its right."""
        e = Arc(*e)
        i = self._face_of.get(e)
        return i is not None and self._faces[i].entry == e

    def incident_cells(self, e) -> tuple[tuple[int, int], ...]:
        """Occupied unit squares whose closure holds arc ``e``."""
        u, v = e
        if self.is_real(u):
            return (self.vertex_square[u],)
        if self.is_real(v):
            return (self.vertex_square[v],)
        a, b = cells_beside(self.lattice_point(u), self.lattice_point(v))
        return tuple(c for c in (a, b) if c in self._occupied)


def _occupied_cells_connected(cells: set[tuple[int, int]]) -> bool:
    if not cells:
        return True
    start = next(iter(cells))
    seen = {start}
    stack = [start]
    while stack:
        i, j = stack.pop()
        for di in (-1, 0, 1):
            for dj in (-1, 0, 1):
                c = (i + di, j + dj)
                if c in cells and c not in seen:
                    seen.add(c)
                    stack.append(c)
    return len(seen) == len(cells)


def build_virtual(g: GeometricGraph) -> VirtualGraph:
    if g.n == 0:
        raise Disconnected("empty graph")
    problems = general_position_violations(g.points, g.edges())
    if problems:
        raise GeneralPositionViolation("; ".join(problems[:3]))

    vertex_square = [square_of(p).corner for p in g.points]
    squares = sorted(set(vertex_square))
    if not _occupied_cells_connected(set(squares)):
        raise Disconnected("occupied squares do not form a connected backbone")

    points: list[Point] = list(g.points)
    kinds = [VertexKind.REAL] * g.n
    lattice_ids: dict[tuple[int, int], int] = {}

    def lattice_id(c: tuple[int, int]) -> int:
        if c not in lattice_ids:
            lattice_ids[c] = len(points)
            points.append(Point.of(*c))
            kinds.append(VertexKind.LATTICE)
        return lattice_ids[c]

    edge_kinds: dict[tuple[int, int], EdgeKind] = {}
    for cell in squares:
        ids = [lattice_id(c) for c in LatticeFace(cell).corners()]
        for a, b in zip(ids, ids[1:] + ids[:1]):
            edge_kinds[edge_key(a, b)] = EdgeKind.LATTICE

    crossing = []
    for u, v in g.edges():
        if vertex_square[u] == vertex_square[v]:
            edge_kinds[(u, v)] = EdgeKind.GRAPH
        else:
            crossing.append((u, v))
    for v, c in enumerate(vertex_square):
        edge_kinds[edge_key(v, lattice_ids[c])] = EdgeKind.CONNECTOR

    nbrs: list[list[int]] = [[] for _ in points]
    for a, b in edge_kinds:
        nbrs[a].append(b)
        nbrs[b].append(a)
    adjacency = []
    for v, ws in enumerate(nbrs):
        order = ccw_sort_indices(points[v], EAST, [points[w] for w in ws])
        adjacency.append(tuple(ws[i] for i in order))

    return VirtualGraph(g, points, kinds, lattice_ids, edge_kinds, adjacency, crossing, squares, vertex_square)


def faces_of_backbone(vg: VirtualGraph) -> list[BackboneFace]:
    """Bounded faces (unit squares and any enclosed holes) plus the outer face."""
    return vg.faces()


def outer_face(vg: VirtualGraph) -> BackboneFace:
    return next(f for f in vg.faces() if f.outer)

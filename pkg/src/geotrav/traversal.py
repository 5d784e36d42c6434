"""Traversal with enumeration of a geometric graph through its virtual graph.

A virtual robot walks the virtual graph with the successor map, using the
entry arcs of backbone faces to organise the faces into a tree it visits
depth first. A real robot, confined to the edges of G, shadows it: after
every move it must stand on a vertex inside one of the occupied squares
touching the virtual robot's arc, and it repositions itself with the
pebble-bounded explorer when it does not.

Retained graph arcs are treated as entries of their own sliver faces: the
virtual robot walks out along them and straight back. This makes every arc
of the virtual graph land exactly once per run, which is what the reporting
rules rely on.
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable, Optional

from .errors import IterationCapExceeded, ShadowLost
from .explorer import explore
from .geograph import (
    Arc,
    GeometricGraph,
    PebbleBudget,
    budget_from_r_squared,
    compute_pebble_budget,
    edge_key,
    general_position_offset,
    rev,
    translated,
)
from .geometry import Point, cone_contains, format_rational, squared_distance
from .virtualgraph import EdgeKind, VirtualGraph, arc_key, build_virtual


class EventKind(enum.Enum):
    MOVE = "move"
    REPOSITION = "reposition"
    REPORT_VERTEX = "report_vertex"
    REPORT_EDGE = "report_edge"
    PHASE = "phase"


class Phase(enum.Enum):
    PRELIMINARY = "preliminary"
    TRAVERSAL = "traversal"


@dataclass(frozen=True)
class TraversalEvent:
    stage: int
    kind: EventKind
    arc: Optional[Arc] = None
    path: tuple[int, ...] = ()
    vertex: Optional[int] = None
    edge: Optional[tuple[int, int]] = None
    phase: Optional[Phase] = None
    note: str = ""


def _coords(p) -> list[str]:
    return [format_rational(p[0]), format_rational(p[1])]


def event_record(vg: VirtualGraph, ev: TraversalEvent) -> dict:
    rec: dict = {"stage": ev.stage, "event": ev.kind.value}
    pts = vg.points
    if ev.kind is EventKind.MOVE:
        rec["arc"] = list(ev.arc)
        rec["from"] = _coords(pts[ev.arc[0]])
        rec["to"] = _coords(pts[ev.arc[1]])
        if ev.note:
            rec["note"] = ev.note
    elif ev.kind is EventKind.REPOSITION:
        rec["path"] = list(ev.path)
        rec["points"] = [_coords(pts[v]) for v in ev.path]
    elif ev.kind is EventKind.REPORT_VERTEX:
        rec["vertex"] = ev.vertex
        rec["x"], rec["y"] = _coords(pts[ev.vertex])
    elif ev.kind is EventKind.REPORT_EDGE:
        rec["edge"] = list(ev.edge)
        rec["via"] = ev.note
    else:
        rec["phase"] = ev.phase.value
        if ev.arc is not None:
            rec["arc"] = list(ev.arc)
        if ev.note:
            rec["note"] = ev.note
    return rec


# --------------------------------------------------------------------------
# reporting rules
# --------------------------------------------------------------------------

def reference_point(vg: VirtualGraph, e_min) -> Point:
    a, b = vg.points[e_min[0]], vg.points[e_min[1]]
    left = min(a, b)
    return Point(left.x, left.y - 1)


def should_report_vertex(vg: VirtualGraph, e, p) -> bool:
    """Report head(e) when it is real and ``p`` falls in the cone at head(e)
    from tail(e) to the next arc. The cones at a vertex partition the turn
    around it and each incoming arc lands once, so each vertex passes once."""
    t, h = e
    if not vg.is_real(h):
        return False
    nxt = vg.succ(e)[1]
    return cone_contains(vg.points[t], vg.points[h], vg.points[nxt], p)


def tail_nearer(a, b, p) -> bool:
    """Is ``a`` strictly nearer to ``p`` than ``b``, ties broken by comparing
    the vectors a->p and b->p lexicographically? Antisymmetric for a != b."""
    da, db = squared_distance(a, p), squared_distance(b, p)
    if da != db:
        return da < db
    return (p[0] - a[0], p[1] - a[1]) < (p[0] - b[0], p[1] - b[1])


def should_report_edge(vg: VirtualGraph, e, p) -> bool:
    t, h = e
    if vg.edge_kinds.get(edge_key(t, h)) is not EdgeKind.GRAPH:
        return False
    return tail_nearer(vg.points[t], vg.points[h], p)


def is_e_min(vg: VirtualGraph, e) -> bool:
    """The only edge both of whose arcs are face entries is the global
    minimum; its upward copy is the one with the smaller tail."""
    return vg.is_entry(e) and vg.is_entry(rev(e)) and vg.points[e[0]] < vg.points[e[1]]


def minimum_lattice_arc(vg: VirtualGraph) -> Arc:
    """Global minimum edge under ``arc_key`` by exhaustive scan, directed from
    its smaller endpoint."""
    u, v = min(vg.edges(EdgeKind.LATTICE), key=lambda uv: arc_key(vg, *uv))
    return Arc(u, v) if vg.points[u] < vg.points[v] else Arc(v, u)


# --------------------------------------------------------------------------
# the two robots
# --------------------------------------------------------------------------

@dataclass
class RealRobot:
    """The real robot: moves along graph edges only, repositioning with the explorer."""

    graph: GeometricGraph
    k: int
    position: int
    max_path: int = 0
    max_pebbles: int = 1
    repositions: int = 0

    def reposition(self, target: Callable[[int], bool]) -> Optional[tuple[int, ...]]:
        if target(self.position):
            return None
        # iterative deepening keeps the path short; every round stays in budget
        for depth in range(1, self.k + 1):
            t = explore(self.graph, self.position, depth, stop=target, record=False)
            self.max_pebbles = max(self.max_pebbles, t.peak_pebbles)
            if t.stopped_at is not None:
                path = t.final_path
                self.max_path = max(self.max_path, len(path) - 1)
                self.repositions += 1
                self.position = path[-1]
                return path
        raise ShadowLost(f"no admissible vertex within {self.k} hops of vertex {self.position}")


@dataclass
class TraversalResult:
    vg: VirtualGraph
    budget: PebbleBudget
    offset: tuple[Fraction, Fraction]
    start: int
    e_min: Arc
    reference: Point
    events: list[TraversalEvent] = field(default_factory=list)
    stages: int = 0
    preliminary_stages: int = 0
    max_separation_sq: Fraction = Fraction(0)
    max_reposition: int = 0
    max_pebbles: int = 1
    landings: dict[Arc, int] = field(default_factory=dict)

    def reported_vertices(self) -> list[int]:
        return [ev.vertex for ev in self.events if ev.kind is EventKind.REPORT_VERTEX]

    def reported_edges(self) -> list[tuple[int, int]]:
        return [ev.edge for ev in self.events if ev.kind is EventKind.REPORT_EDGE]

    def repositions(self) -> list[tuple[int, ...]]:
        return [ev.path for ev in self.events if ev.kind is EventKind.REPOSITION]

    def records(self) -> list[dict]:
        return [event_record(self.vg, ev) for ev in self.events]

    def jsonl(self) -> str:
        return "".join(json.dumps(r) + "\n" for r in self.records())

    def metering(self) -> dict:
        return {
            "k": self.budget.k,
            "max_pebbles": self.max_pebbles,
            "max_reposition": self.max_reposition,
            "stages": self.stages,
            "events": len(self.events),
        }


class _Run:
    def __init__(self, vg: VirtualGraph, budget: PebbleBudget, start: int):
        self.vg = vg
        self.robot = RealRobot(vg.graph, budget.k, start)
        self.events: list[TraversalEvent] = []
        self.stage = 0
        self.max_sep = Fraction(0)
        self.phase = Phase.PRELIMINARY

    def emit(self, **kw) -> None:
        self.events.append(TraversalEvent(self.stage, **kw))

    def move(self, e: Arc, note: str = "") -> None:
        """The virtual robot now sits at head(e); the real robot catches up if needed."""
        self.stage += 1
        self.emit(kind=EventKind.MOVE, arc=e, note=note)
        vg = self.vg
        h = e[1]
        if self.phase is Phase.TRAVERSAL and vg.is_real(h):
            target = lambda u: u == h  # noqa: E731
        else:
            cells = vg.incident_cells(e)
            target = lambda u: vg.vertex_square[u] in cells  # noqa: E731
        path = self.robot.reposition(target)
        if path is not None:
            self.emit(kind=EventKind.REPOSITION, path=path)
        sep = squared_distance(vg.points[self.robot.position], vg.points[h])
        if sep > self.max_sep:
            self.max_sep = sep


def find_e_min(vg: VirtualGraph, start: int, budget: PebbleBudget, run: Optional[_Run] = None) -> tuple[Arc, list[TraversalEvent]]:
    """Climb the face tree of the backbone from the square of ``start``: leave
    each face through its entry arc into the parent face and walk that face
    to its own entry, until the root edge is reached."""
    if run is None:
        run = _Run(vg, budget, start)
    run.phase = Phase.PRELIMINARY
    run.emit(kind=EventKind.PHASE, phase=Phase.PRELIMINARY)
    i, j = vg.vertex_square[start]
    e = Arc(vg.lattice_ids[(i, j)], vg.lattice_ids[(i + 1, j)])
    cap = 8 * vg.num_arcs()
    steps = 0
    while True:
        e = rev(e)
        run.move(e, note="rev")
        while not vg.is_entry(e):
            e = vg.lattice_succ(e)
            run.move(e)
            steps += 1
            if steps > cap:
                raise IterationCapExceeded("preliminary phase did not reach the minimum edge")
        if is_e_min(vg, e):
            return e, run.events


def traverse_virtual(vg: VirtualGraph, budget: PebbleBudget, start: int = 0, offset=(Fraction(0), Fraction(0))) -> TraversalResult:
    run = _Run(vg, budget, start)
    e_min, _ = find_e_min(vg, start, budget, run)
    prelim = run.stage
    p = reference_point(vg, e_min)
    run.phase = Phase.TRAVERSAL
    run.emit(kind=EventKind.PHASE, phase=Phase.TRAVERSAL, arc=e_min)

    landings: dict[Arc, int] = {}
    cap = 8 * vg.num_arcs()
    e = e_min
    while True:
        e = vg.succ(e)
        landings[e] = landings.get(e, 0) + 1
        if len(landings) > cap or landings[e] > 8:
            raise IterationCapExceeded("traversal phase exceeded its iteration cap")
        run.move(e)
        if should_report_vertex(vg, e, p):
            s = e[1]
            run.emit(kind=EventKind.REPORT_VERTEX, vertex=s)
            for w in vg.crossing_partners(s):
                if vg.points[s] < vg.points[w]:
                    run.emit(kind=EventKind.REPORT_EDGE, edge=edge_key(s, w), note="crossing")
        if should_report_edge(vg, e, p):
            run.emit(kind=EventKind.REPORT_EDGE, edge=edge_key(*e), note="walk")
        bounce = vg.edge_kinds[edge_key(*e)] is EdgeKind.GRAPH
        if bounce or vg.is_entry(e) or vg.is_entry(rev(e)):
            e = rev(e)
            run.move(e, note="rev")
        if e == e_min:
            break

    robot = run.robot
    return TraversalResult(
        vg=vg,
        budget=budget,
        offset=tuple(offset),
        start=start,
        e_min=e_min,
        reference=p,
        events=run.events,
        stages=run.stage,
        preliminary_stages=prelim,
        max_separation_sq=run.max_sep,
        max_reposition=robot.max_path,
        max_pebbles=robot.max_pebbles,
        landings=landings,
    )


def traverse_enumerate(g: GeometricGraph, start: int = 0, seed: int = 0, budget: Optional[PebbleBudget] = None) -> TraversalResult:
    """Report every vertex and edge of connected ``g`` once.

    The drawing is first translated into general position with respect to
    the lattice (distances, hence the graph, are unchanged); coordinates in
    the event log refer to the translated drawing and ``offset`` records the
    shift.
    """
    if budget is None:
        budget = compute_pebble_budget(g) if g.n >= 2 else budget_from_r_squared(Fraction(1), qualifying=False)
    dx, dy = general_position_offset(g.points, seed, g.edges())
    moved = translated(g, dx, dy)
    vg = build_virtual(moved)
    return traverse_virtual(vg, budget, start, (dx, dy))

"""Pebble-bounded exploration of the k-th neighbourhood of a vertex.

The walker keeps its pebbles on an induced path starting at ``v`` and moves
them depth-first using only the rotation system, so it needs k + 1 pebbles
and a constant number of registers (current arc, start arc, mode).
"""
from __future__ import annotations

import enum
import json
from dataclasses import dataclass, field
from typing import Callable, Optional

from .errors import BadBudget, IsolatedVertex
from .geograph import Arc, GeometricGraph, first_arc, rev


class Mode(str, enum.Enum):
    FW = "fw"
    BW = "bw"


@dataclass(frozen=True)
class ExplorationState:
    pebbled: tuple[int, ...]
    arc: Arc
    mode: Mode

    @property
    def frontier(self) -> int:
        return self.pebbled[-1]

    def as_record(self, iteration: int) -> dict:
        return {"iter": iteration, "P": list(self.pebbled), "arc": list(self.arc), "mode": self.mode.value}


@dataclass
class ExplorationTrace:
    start: int
    k: int
    states: list[ExplorationState] = field(default_factory=list)
    visited: set[int] = field(default_factory=set)
    terminated: bool = False
    stopped_at: Optional[int] = None
    iterations: int = 0
    peak_pebbles: int = 1

    @property
    def max_pebbles(self) -> int:
        return self.peak_pebbles

    @property
    def final_path(self) -> tuple[int, ...]:
        return self.states[-1].pebbled if self.states else (self.start,)

    def jsonl(self) -> str:
        return "".join(json.dumps(s.as_record(i)) + "\n" for i, s in enumerate(self.states, 1))


def initial_state(g: GeometricGraph, v: int, k: int) -> ExplorationState:
    if k < 1:
        raise BadBudget(f"k must be at least 1, got {k}")
    if g.degree(v) == 0:
        raise IsolatedVertex(f"vertex {v} has no incident arc")
    e0 = first_arc(g, v)
    return ExplorationState((v, e0.head), e0, Mode.FW)


def _scan(g: GeometricGraph, pebbled: tuple[int, ...], e: Arc) -> Arc:
    # rotate around head(e) starting after rev(e), skipping arcs whose head is
    # unpebbled but adjacent to a pebbled vertex other than head(e); rev(e) is
    # always an acceptable landing, so this terminates. head(e) is always the
    # frontier, so the other pebbles are pebbled[:-1]
    t, h = e
    others = pebbled[:-1]
    nbrs = g._nbrs
    rot = g.adjacency[h]
    d = len(rot)
    i = g._slot[h][t]
    while True:
        i += 1
        if i == d:
            i = 0
        w = rot[i]
        if w in pebbled or nbrs[w].isdisjoint(others):
            return Arc(h, w)


def _advance(g: GeometricGraph, P: tuple[int, ...], e: Arc, forward: bool, k: int, e0: Arc):
    # the transition on bare tuples; returns (P', e', forward') or None
    if forward and len(P) == k + 1:
        return P[:-1], Arc(e[1], e[0]), False
    e = _scan(g, P, e)
    if not forward and e == e0:
        return None
    if e[1] in P:
        return P[:-1], e, False
    return P + (e[1],), e, True


def step(g: GeometricGraph, s: ExplorationState, k: int, e0: Arc) -> Optional[ExplorationState]:
    """One transition of the walker; ``None`` means it terminated back on e0."""
    nxt = _advance(g, s.pebbled, s.arc, s.mode is Mode.FW, k, e0)
    if nxt is None:
        return None
    P, e, forward = nxt
    return ExplorationState(P, e, Mode.FW if forward else Mode.BW)


def explore(
    g: GeometricGraph,
    v: int,
    k: int,
    stop: Callable[[int], bool] | None = None,
    max_iterations: int | None = None,
    record: bool = True,
) -> ExplorationTrace:
    """Visit every vertex within ``k`` hops of ``v``.

    ``stop`` makes the walk halt at the first newly pebbled vertex for which
    it returns true; the real robot uses this to reposition itself. With
    ``record=False`` only the final state is kept (``states`` holds at most
    one entry) and ``visited`` stays empty.
    """
    if k < 1:
        raise BadBudget(f"k must be at least 1, got {k}")
    trace = ExplorationTrace(v, k, visited={v})
    if stop is not None and stop(v):
        trace.stopped_at = v
        return trace
    if g.degree(v) == 0:
        trace.terminated = True
        return trace
    s0 = initial_state(g, v, k)
    e0 = s0.arc
    # same transition as _advance, inlined on plain tuples for speed
    adjacency, slots, nbrs = g.adjacency, g._slot, g._nbrs
    P, e, forward = s0.pebbled, tuple(e0), True
    count = 0
    peak = 1
    while True:
        count += 1
        if len(P) > peak:
            peak = len(P)
        if record:
            trace.states.append(ExplorationState(P, Arc(*e), Mode.FW if forward else Mode.BW))
        if forward:
            # every forward state has just pebbled its frontier
            u = P[-1]
            if record:
                trace.visited.add(u)
            if stop is not None and stop(u):
                trace.stopped_at = u
                break
        if max_iterations is not None and count >= max_iterations:
            break
        if forward and len(P) == k + 1:
            P, e, forward = P[:-1], (e[1], e[0]), False
            continue
        t, h = e
        rot = adjacency[h]
        d = len(rot)
        i = slots[h][t]
        others = P[:-1]
        while True:
            i += 1
            if i == d:
                i = 0
            w = rot[i]
            if w in P or nbrs[w].isdisjoint(others):
                break
        e = (h, w)
        if not forward and e == e0:
            trace.terminated = True
            break
        if w in P:
            P, forward = P[:-1], False
        else:
            P, forward = P + (w,), True
    if not record and not trace.terminated:
        trace.states.append(ExplorationState(P, Arc(*e), Mode.FW if forward else Mode.BW))
    trace.iterations = count
    trace.peak_pebbles = peak
    return trace


def iteration_cap(g: GeometricGraph, k: int) -> int:
    return 4 * 2 * g.num_edges() * 2 ** (k + 1)

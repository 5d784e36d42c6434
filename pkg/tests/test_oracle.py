from fractions import Fraction as F
from types import SimpleNamespace as NS

import pytest
from hypothesis import given
from hypothesis import strategies as st

from geotrav.errors import Disconnected
from geotrav.explorer import ExplorationState, ExplorationTrace, Mode, explore
from geotrav.geograph import build_unit_disk_graph
from geotrav.geometry import Point
from geotrav.oracle import (
    bfs_neighborhood,
    has_induced_path,
    is_induced_path,
    kruskal,
    segments_meet,
    unit_disk_edge_set,
    verify_enumeration,
    verify_exploration,
    verify_left_neighbor,
    verify_quasi_planar,
    verify_reconstruction,
)

PATH5 = [(i, 0) for i in range(5)]


def plain(adjacency, points=None, weights=None):
    return NS(adjacency=adjacency, points=points or [(0, 0)] * len(adjacency), weights=weights)


def test_bfs_examples(six):
    assert bfs_neighborhood(six, 0, 0) == {0}
    assert bfs_neighborhood(six, 0, 2) == set(range(6))
    path = build_unit_disk_graph([Point.of(*p) for p in PATH5])
    assert bfs_neighborhood(path, 0, 2) == {0, 1, 2}
    assert bfs_neighborhood(path, 2, 1) == {1, 2, 3}


def test_induced_path_examples():
    g = plain([[1, 2], [0, 2], [0, 1], []])
    assert is_induced_path(g, (0, 1))
    assert not is_induced_path(g, (0, 1, 2))
    assert not is_induced_path(g, (0, 1, 0))
    assert has_induced_path(g, 0, 1) and not has_induced_path(g, 0, 2)
    assert has_induced_path(g, 3, 0) and not has_induced_path(g, 3, 1)


def test_unit_disk_edge_set():
    pts = [(0, 0), (1, 0), (F(1, 2), F(4, 5)), (3, 3), (F(1, 2), F(9, 10))]
    assert unit_disk_edge_set(pts) == {(0, 1), (0, 2), (1, 2), (2, 4)}


def test_kruskal_examples():
    g = plain([[1, 2], [0, 2], [0, 1]], weights={(0, 1): F(3), (0, 2): F(1), (1, 2): F(2)})
    assert kruskal(g) == {1, 2}
    with pytest.raises(Disconnected):
        kruskal(plain([[], []], weights={}))


@pytest.mark.parametrize(
    "a, b, c, d, meet",
    [
        ((0, 0), (2, 2), (0, 2), (2, 0), True),
        ((0, 0), (1, 0), (2, 0), (3, 0), False),
        ((0, 0), (2, 0), (1, 0), (3, 0), True),
        ((0, 0), (1, 0), (1, 0), (1, 1), True),
        ((0, 0), (1, 1), (1, 0), (2, 1), False),
    ],
)
def test_segments_meet(a, b, c, d, meet):
    assert segments_meet(a, b, c, d) is meet
    assert segments_meet(c, d, a, b) is meet


def ev(kind, **kw):
    return NS(kind=kind, vertex=kw.get("vertex"), edge=kw.get("edge"))


def test_enumeration_controls():
    g = plain([[1], [0]])
    good = [ev("report_vertex", vertex=0), ev("report_vertex", vertex=1), ev("report_edge", edge=(1, 0))]
    assert verify_enumeration(g, good).passed
    assert not verify_enumeration(g, good + [ev("report_vertex", vertex=0)]).passed
    assert not verify_enumeration(g, good[:2]).passed
    assert not verify_enumeration(g, good + [ev("report_vertex", vertex=7)]).passed
    r = verify_enumeration(plain([[], []]), good)
    assert not r and "non-edge" in r.details


def test_exploration_controls(six):
    good = explore(six, 0, 2)
    assert verify_exploration(six, 0, 2, good).passed
    unfinished = ExplorationTrace(0, 2, states=good.states[:3], visited={0, 1, 2}, terminated=True)
    assert not verify_exploration(six, 0, 2, unfinished).passed
    bad_path = ExplorationTrace(
        0, 2, states=[ExplorationState((0, 1, 2), (1, 2), Mode.FW)], visited=good.visited, terminated=True
    )
    assert "induced" in verify_exploration(six, 0, 2, bad_path).details
    repeat = ExplorationTrace(0, 2, states=good.states + good.states[:1], visited=good.visited, terminated=True)
    assert "repeats" in verify_exploration(six, 0, 2, repeat).details
    assert not verify_exploration(six, 0, 2, ExplorationTrace(0, 2)).passed
    assert not verify_exploration(six, 0, 2, good, cap=5).passed


def corrupt_vg(edge_kinds, points, n_real, crossing=(), adjacency=None):
    if adjacency is None:
        adjacency = [[] for _ in points]
        for u, v in edge_kinds:
            adjacency[u].append(v)
            adjacency[v].append(u)
    return NS(edge_kinds=edge_kinds, points=points, n_real=n_real, crossing=list(crossing), adjacency=adjacency)


SQUARE = [(0, 0), (1, 0), (1, 1), (0, 1)]


def lattice_ring(first):
    return {(first + i, first + (i + 1) % 4) if i < 3 else (first, first + 3): "lattice" for i in range(4)}


def test_left_neighbor_control():
    pts = [(F(1, 2), F(1, 2))] + SQUARE
    kinds = lattice_ring(1)
    assert verify_left_neighbor(corrupt_vg({**kinds, (0, 1): "connector"}, pts, 1)).passed
    # connector to the lower-right corner points the wrong way
    assert not verify_left_neighbor(corrupt_vg({**kinds, (0, 2): "connector"}, pts, 1)).passed


def test_quasi_planar_control():
    pts = [(F(1, 2), F(1, 2)), (F(3, 2), F(1, 2))] + SQUARE
    kinds = {**lattice_ring(2), (0, 2): "connector"}
    assert verify_quasi_planar(corrupt_vg(kinds, pts, 2)).passed
    # a retained edge that leaves the square crosses the right lattice side
    assert not verify_quasi_planar(corrupt_vg({**kinds, (0, 1): "graph"}, pts, 2)).passed


def test_reconstruction_control():
    g = build_unit_disk_graph([Point.of("0.5", "0.5"), Point.of("1.3", "0.5")])
    pts = list(g.points)
    ok = corrupt_vg({}, pts, 2, crossing=[(0, 1)])
    assert verify_reconstruction(ok, g).passed
    assert not verify_reconstruction(corrupt_vg({}, pts, 2), g).passed
    both = corrupt_vg({(0, 1): "graph"}, pts, 2, crossing=[(0, 1)])
    assert not verify_reconstruction(both, g).passed
    g2 = build_unit_disk_graph([Point.of("0.3", "0.5"), Point.of("0.7", "0.5")])
    assert not verify_reconstruction(corrupt_vg({}, list(g2.points), 2, crossing=[(0, 1)]), g2).passed


@given(st.lists(st.tuples(st.integers(0, 8), st.integers(0, 8)), min_size=1, max_size=14, unique=True), st.integers(0, 3))
def test_bfs_matches_layered_definition(cells, k):
    pts = [Point(F(x, 3), F(y, 3)) for x, y in cells]
    g = build_unit_disk_graph(pts)
    got = bfs_neighborhood(g, 0, k)
    layer, reach = {0}, {0}
    for _ in range(k):
        layer = {w for u in layer for w in g.adjacency[u]} - reach
        reach |= layer
    assert got == reach

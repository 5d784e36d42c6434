import math
from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from geotrav.errors import Disconnected, DuplicatePoint, InvalidArc, InvalidWeight, NonInjectiveWeights, TooSmall
from geotrav.generate import generate
from geotrav.geograph import (
    Arc,
    build_unit_disk_graph,
    compute_pebble_budget,
    ensure_general_position,
    first_arc,
    general_position_violations,
    graph_from_edges,
    next_around,
    rev,
    rotation_pred,
    rotation_succ,
)
from geotrav.geometry import Point
from geotrav.oracle import unit_disk_edge_set


def pts(*xy):
    return [Point.of(x, y) for x, y in xy]


@pytest.mark.parametrize(
    "points, edges",
    [
        (pts(("1/2", "1/2"), ("6/5", "1/2")), [(0, 1)]),
        (pts(("1/2", "1/2"), ("8/5", "1/2")), []),
        (pts(("1/20", "1/2"), ("19/20", "1/2"), ("37/20", "1/2")), [(0, 1), (1, 2)]),
    ],
)
def test_build_examples(points, edges):
    assert build_unit_disk_graph(points).edges() == edges


def test_build_rejects_duplicates():
    with pytest.raises(DuplicatePoint):
        build_unit_disk_graph(pts((0, 0), (0, 0)))


def test_weights_must_be_injective_and_positive():
    p = pts((0, 0), ("0.5", 0), (1, 0))
    with pytest.raises(NonInjectiveWeights):
        build_unit_disk_graph(p, {(0, 1): 1, (1, 2): 1, (0, 2): 2})
    with pytest.raises(InvalidWeight):
        build_unit_disk_graph(p, {(0, 1): 0, (1, 2): 1, (0, 2): 2})


def test_single_leaf_succ_is_reverse():
    g = build_unit_disk_graph(pts(("0.5", "0.5"), ("0.9", "0.5")))
    assert rotation_succ(g, Arc(0, 1)) == Arc(1, 0)


def test_star_next_around():
    g = build_unit_disk_graph(pts((0, 0), (1, 0), (0, 1), (-1, 0)))
    assert next_around(g, Arc(0, 1)) == Arc(0, 2)
    assert first_arc(g, 0) == Arc(0, 1)


def test_invalid_arc():
    g = build_unit_disk_graph(pts((0, 0), (5, 5)))
    with pytest.raises(InvalidArc):
        rotation_succ(g, Arc(0, 1))


@pytest.mark.parametrize(
    "points, r2, k",
    [
        (pts(("0.05", "0.5"), ("0.95", "0.5")), F(1), 2),
        (pts(("0.05", "0.5"), ("0.95", "0.5"), ("1.85", "0.5")), F(400, 324), 3),
        (pts((0, 0), (1, 0), (2, 0), (3, 0)), F(1), 2),
    ],
)
def test_pebble_budget_examples(points, r2, k):
    b = compute_pebble_budget(build_unit_disk_graph(points))
    assert (b.r_squared_bound, b.k) == (r2, k)


def test_pebble_budget_errors():
    with pytest.raises(TooSmall):
        compute_pebble_budget(build_unit_disk_graph(pts((0, 0))))
    with pytest.raises(Disconnected):
        compute_pebble_budget(build_unit_disk_graph(pts((0, 0), (3, 0))))


@given(st.integers(0, 10**6), st.integers(2, 40))
def test_budget_floor_is_exact(seed, n):
    g = generate(n, 8.0, seed, connected=True)
    b = compute_pebble_budget(g)
    assert b.k * b.k <= 8 * b.r_squared_bound < (b.k + 1) ** 2
    assert b.k >= 2


@given(st.integers(0, 10**6), st.integers(1, 30))
def test_rotation_identities(seed, n):
    g = generate(n, 6.0, seed)
    for e in g.arcs():
        assert rev(rev(e)) == e
        assert rotation_pred(g, rotation_succ(g, e)) == e
        assert rotation_succ(g, rotation_pred(g, e)) == e
    for v in range(g.n):
        if g.degree(v) == 0:
            continue
        seen, e = [], first_arc(g, v)
        for _ in range(g.degree(v)):
            seen.append(e)
            e = next_around(g, e)
        assert e == first_arc(g, v)
        assert sorted(seen) == sorted(Arc(v, w) for w in g.adjacency[v])


@given(st.integers(0, 10**6), st.integers(1, 30))
def test_edges_match_brute_force(seed, n):
    g = generate(n, 6.0, seed)
    assert set(g.edges()) == unit_disk_edge_set(g.points)


@given(st.integers(0, 10**6), st.fractions(-5, 5, max_denominator=50), st.fractions(-5, 5, max_denominator=50))
def test_translation_preserves_graph(seed, dx, dy):
    g = generate(20, 6.0, seed)
    moved = build_unit_disk_graph([Point(p.x + dx, p.y + dy) for p in g.points])
    assert moved.adjacency == g.adjacency


@pytest.mark.parametrize(
    "points, changed",
    [
        (pts(("1/2", "1/2")), False),
        (pts((1, "1/2")), True),
        (pts(("0.7", "0.7"), ("1.3", "1.3")), True),  # edge through lattice point (1, 1)
        (pts(("0.2", "0.3"), ("0.9", "0.4")), False),
    ],
)
def test_ensure_general_position_examples(points, changed):
    out = ensure_general_position(points, seed=7)
    assert (out != points) is changed
    g = build_unit_disk_graph(out)
    assert not general_position_violations(g.points, g.edges())
    assert g.adjacency == build_unit_disk_graph(points).adjacency


def test_diagonal_pair_in_one_square_is_moved_for_its_connector():
    # the edge meets no lattice point, but the connector of (3/4, 3/4) to the
    # corner (0, 0) runs through (1/4, 1/4), so a shift is still required
    p = pts(("1/4", "1/4"), ("3/4", "3/4"))
    assert general_position_violations(p, [(0, 1)]) == ["connector of vertex 1 passes through vertex 0"]
    assert ensure_general_position(p, seed=3) != p


def test_connector_through_vertex_is_a_violation():
    # (0.25, 0.25) lies on the segment from (0.5, 0.5) to the corner (0, 0)
    p = pts(("0.25", "0.25"), ("0.5", "0.5"))
    assert any("connector" in s for s in general_position_violations(p, []))
    assert not general_position_violations(ensure_general_position(p, seed=1), [])


def test_explicit_edges(six):
    assert six.edges() == [(0, 1), (0, 2), (0, 3), (2, 4), (2, 5), (3, 4)]
    assert not six.unit_disk
    assert six.adjacency[0] == (1, 2, 3)
    assert six.adjacency[2][:3] == (4, 5, 0)


def test_explicit_edges_flag_unit_disk():
    p = pts(("0.5", "0.5"), ("1.2", "0.5"))
    assert graph_from_edges(p, [(0, 1)]).unit_disk
    assert not graph_from_edges(p, []).unit_disk


def test_isqrt_matches_float_on_examples():
    # sanity for the exact floor: floor(sqrt(3200/324)) = 3
    assert math.isqrt(math.floor(F(3200, 324))) == 3

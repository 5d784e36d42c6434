from fractions import Fraction as F

import pytest
from hypothesis import given
from hypothesis import strategies as st

from geotrav.errors import Disconnected, GeneralPositionViolation, InvalidArc, OnLattice
from geotrav.generate import generate
from geotrav.geograph import build_unit_disk_graph, general_position_offset, translated
from geotrav.geometry import Point
from geotrav.oracle import verify_left_neighbor, verify_quasi_planar, verify_reconstruction
from geotrav.virtualgraph import (
    EdgeKind,
    LatticeFace,
    VertexKind,
    arc_key,
    build_virtual,
    cells_beside,
    faces_of_backbone,
    outer_face,
    square_of,
)


def vg_of(*xy):
    return build_virtual(build_unit_disk_graph([Point.of(x, y) for x, y in xy]))


def lat(vg, c):
    return vg.lattice_ids[c]


@pytest.mark.parametrize(
    "p, corner",
    [
        ((F(1, 2), F(1, 2)), (0, 0)),
        ((F(-1, 4), F(5, 2)), (-1, 2)),
        ((F(19, 20), F(1, 20)), (0, 0)),
        ((F(-7, 2), F(-1, 3)), (-4, -1)),
    ],
)
def test_square_of(p, corner):
    assert square_of(p) == LatticeFace(corner)


@pytest.mark.parametrize("p", [(1, F(1, 2)), (F(1, 2), 0), (F(-3), F(2))])
def test_square_of_rejects_lattice_lines(p):
    with pytest.raises(OnLattice):
        square_of(p)


def test_lattice_face_corners_run_counterclockwise():
    assert LatticeFace((2, -1)).corners() == ((2, -1), (3, -1), (3, 0), (2, 0))


@pytest.mark.parametrize(
    "a, b, cells",
    [((0, 0), (1, 0), ((0, 0), (0, -1))), ((1, 0), (0, 0), ((0, 0), (0, -1))), ((2, 3), (2, 4), ((2, 3), (1, 3)))],
)
def test_cells_beside(a, b, cells):
    assert cells_beside(a, b) == cells


def test_single_vertex():
    vg = vg_of(("0.5", "0.5"))
    assert vg.n_real == 1 and vg.size == 5
    assert sorted(vg.lattice_ids) == [(0, 0), (0, 1), (1, 0), (1, 1)]
    assert len(vg.edges(EdgeKind.LATTICE)) == 4
    assert vg.edges(EdgeKind.CONNECTOR) == [(0, lat(vg, (0, 0)))]
    assert vg.edges(EdgeKind.GRAPH) == [] and vg.crossing == []
    assert [vg.kind(0, lat(vg, (0, 0)))] == [EdgeKind.CONNECTOR]
    assert vg.kinds[0] is VertexKind.REAL and vg.kinds[1] is VertexKind.LATTICE


def test_same_square_edge_is_retained():
    vg = vg_of(("0.3", "0.6"), ("0.7", "0.4"))
    assert vg.edges(EdgeKind.GRAPH) == [(0, 1)]
    assert vg.crossing == []
    assert len(vg.edges(EdgeKind.CONNECTOR)) == 2


def test_adjacent_square_edge_is_crossing():
    vg = vg_of(("0.5", "0.5"), ("1.3", "0.5"))
    assert vg.crossing == [(0, 1)]
    assert vg.edges(EdgeKind.GRAPH) == []
    assert len(vg.lattice_ids) == 6 and len(vg.edges(EdgeKind.LATTICE)) == 7
    assert vg.crossing_partners(0) == [1] and vg.crossing_partners(1) == [0]
    with pytest.raises(InvalidArc):
        vg.kind(0, 1)


def test_far_apart_squares_are_disconnected():
    with pytest.raises(Disconnected):
        vg_of(("0.5", "0.5"), ("5.5", "5.5"))


def test_general_position_violation_raised():
    with pytest.raises(GeneralPositionViolation):
        vg_of(("0", "0.5"))


def test_connector_through_vertex_rejected():
    with pytest.raises(GeneralPositionViolation):
        vg_of(("0.25", "0.25"), ("0.75", "0.75"))


def _bounded(vg):
    return [f for f in faces_of_backbone(vg) if not f.outer]


@pytest.mark.parametrize(
    "points, squares",
    [
        ([("0.5", "0.5")], 1),
        ([("0.5", "0.5"), ("1.3", "0.5")], 2),
        ([("0.5", "0.5"), ("1.3", "0.5"), ("0.4", "1.2")], 3),
        ([("0.5", "0.5"), ("1.4", "1.3")], 2),
    ],
)
def test_face_counts(points, squares):
    vg = vg_of(*points)
    faces = faces_of_backbone(vg)
    assert sum(f.outer for f in faces) == 1
    occupied = [f for f in faces if f.occupied]
    assert len(occupied) == squares and len(faces) == squares + 1
    for f in occupied:
        assert len(f.arcs) == 4 and f.square.corner in vg.squares


def test_ring_encloses_unit_hole():
    ring = [(i + F(1, 2), j + F(1, 2)) for i in range(3) for j in range(3) if (i, j) != (1, 1)]
    vg = build_virtual(build_unit_disk_graph([Point(x, y) for x, y in ring]))
    faces = faces_of_backbone(vg)
    assert len(faces) == 10
    holes = [f for f in faces if not f.outer and not f.occupied]
    assert len(holes) == 1 and holes[0].square == LatticeFace((1, 1))


def test_ring_encloses_larger_hole():
    cells = [(i, j) for i in range(4) for j in range(4) if i in (0, 3) or j in (0, 3)]
    pts = [Point(i + F(1, 2), j + F(1, 2)) for i, j in cells]
    vg = build_virtual(build_unit_disk_graph(pts))
    holes = [f for f in _bounded(vg) if not f.occupied]
    assert len(holes) == 1
    assert holes[0].square is None and len(holes[0].arcs) == 8


def test_every_lattice_arc_has_one_face_and_faces_walk_lattice_succ():
    vg = vg_of(("0.5", "0.5"), ("1.3", "0.5"), ("0.4", "1.2"))
    lattice_arcs = [a for a in vg.arcs() if vg.kind(*a) is EdgeKind.LATTICE]
    seen = [a for f in vg.faces() for a in f.arcs]
    assert sorted(seen) == sorted(lattice_arcs)
    for f in vg.faces():
        for a, b in zip(f.arcs, f.arcs[1:] + f.arcs[:1]):
            assert vg.lattice_succ(a) == b


def test_outer_face_is_walked_counterclockwise():
    vg = vg_of(("0.5", "0.5"))
    o = outer_face(vg)
    assert o.outer and len(o.arcs) == 4
    square = next(f for f in vg.faces() if f.occupied)
    assert set(o.arcs) == {(b, a) for a, b in square.arcs}


def test_entry_examples_two_squares():
    vg = vg_of(("0.5", "0.5"), ("1.3", "0.5"))
    left = (lat(vg, (0, 0)), lat(vg, (0, 1)))
    key = arc_key(vg, *left)
    assert key == (Point.of(0, 0), Point.of(0, 1))
    assert min(arc_key(vg, *e) for e in vg.edges(EdgeKind.LATTICE)) == key
    both = [e for e in vg.edges(EdgeKind.LATTICE) if vg.is_entry(e) and vg.is_entry(e[::-1])]
    assert [tuple(sorted(e)) for e in both] == [tuple(sorted(left))]
    # entry of the outer face and of the left square share that edge
    assert vg.is_entry(left) and vg.is_entry(left[::-1])


def test_incident_cells():
    vg = vg_of(("0.5", "0.5"), ("1.3", "0.5"))
    mid = (lat(vg, (1, 0)), lat(vg, (1, 1)))
    assert sorted(vg.incident_cells(mid)) == [(0, 0), (1, 0)]
    assert vg.incident_cells((lat(vg, (0, 0)), lat(vg, (1, 0)))) == ((0, 0),)
    assert vg.incident_cells((0, lat(vg, (0, 0)))) == ((0, 0),)


def test_succ_pred_inverse_on_all_arcs():
    vg = vg_of(("0.5", "0.5"), ("1.3", "0.5"), ("0.4", "1.2"), ("0.7", "0.2"))
    for a in vg.arcs():
        assert vg.pred(vg.succ(a)) == a
        assert vg.succ(a)[0] == a[1]


@given(st.integers(0, 10**6), st.integers(1, 40))
def test_random_virtual_graphs_satisfy_oracles(seed, n):
    g = generate(n, 7.0, seed, connected=True)
    dx, dy = general_position_offset(g.points, seed, g.edges())
    g2 = translated(g, dx, dy)
    vg = build_virtual(g2)
    assert verify_quasi_planar(vg).passed
    assert verify_left_neighbor(vg).passed
    assert verify_reconstruction(vg, g2).passed
    entries = [a for a in vg.arcs() if vg.is_entry(a)]
    assert len(entries) == len(vg.faces())
    double = {tuple(sorted(e)) for e in entries if vg.is_entry(e[::-1])}
    assert len(double) == 1

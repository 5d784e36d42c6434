"""Bounded-memory traversal of unit-disk graphs through a lattice-augmented
virtual graph, with a pebble-bounded neighbourhood explorer and a
scan-driven minimum spanning tree."""
from .errors import GeoTravError
from .explorer import ExplorationState, ExplorationTrace, Mode, explore, initial_state, step
from .geograph import (
    Arc,
    GeometricGraph,
    PebbleBudget,
    build_unit_disk_graph,
    compute_pebble_budget,
    ensure_general_position,
    graph_from_edges,
    next_around,
    rev,
    rotation_pred,
    rotation_succ,
)
from .geometry import Orientation, Point, ccw_order_around, cone_contains, orientation, squared_distance
from .mst import check_cycle_lemma, discard_weight, min_spanning_tree, next_weight
from .traversal import TraversalEvent, find_e_min, traverse_enumerate
from .virtualgraph import LatticeFace, VirtualGraph, build_virtual, faces_of_backbone, square_of

__all__ = [name for name in dir() if not name.startswith("_")]

"""Seeded random instances."""
from __future__ import annotations

import math
import random
from fractions import Fraction
from typing import Optional

from .errors import GenerationExhausted, InvalidWeight
from .geograph import GeometricGraph, build_unit_disk_graph, ensure_general_position, is_connected
from .geometry import Point

DIGITS = 4


def box_side(n: int, density: float) -> float:
    # expected degree is about (n - 1) * pi / side^2 for unit disks in a square
    if n <= 1:
        return 1.0
    return math.sqrt(math.pi * (n - 1) / density)


def random_points(n: int, density: float, rng: random.Random) -> list[Point]:
    scale = 10**DIGITS
    hi = max(1, int(box_side(n, density) * scale))
    seen: set[tuple[int, int]] = set()
    pts = []
    while len(pts) < n:
        xy = (rng.randrange(hi), rng.randrange(hi))
        if xy in seen:
            continue
        seen.add(xy)
        pts.append(Point(Fraction(xy[0], scale), Fraction(xy[1], scale)))
    return pts


def random_weights(g: GeometricGraph, rng: random.Random) -> dict[tuple[int, int], Fraction]:
    edges = g.edges()
    values = rng.sample(range(1, 10 * len(edges) + 2), len(edges))
    return {e: Fraction(w) for e, w in zip(edges, values)}


def generate(
    n: int,
    density: float,
    seed: int,
    connected: bool = False,
    weighted: bool = False,
    max_tries: int = 200,
) -> GeometricGraph:
    """``n`` points in a square sized for the requested expected degree, put
    in general position with respect to the lattice."""
    if n < 1:
        raise InvalidWeight("n must be at least 1")
    if density <= 0:
        raise InvalidWeight("density must be positive")
    rng = random.Random(seed)
    for _ in range(max_tries):
        pts = ensure_general_position(random_points(n, density, rng), seed=rng.randrange(1 << 30))
        g = build_unit_disk_graph(pts)
        if connected and not is_connected(g):
            continue
        if weighted:
            g = build_unit_disk_graph(pts, random_weights(g, rng))
        return g
    raise GenerationExhausted(f"no connected sample after {max_tries} tries (n={n}, density={density})")


def corpus(count: int, n_max: int, seed: int = 0, weighted: bool = False, density: Optional[float] = None) -> list[GeometricGraph]:
    """Connected instances with sizes spread over ``2..n_max``."""
    rng = random.Random(seed)
    out = []
    for i in range(count):
        n = rng.randint(2, n_max)
        d = density if density is not None else rng.uniform(6.0, 10.0)
        out.append(generate(n, d, seed=rng.randrange(1 << 30), connected=True, weighted=weighted))
    return out

"""Exact planar predicates over rational coordinates.

Every predicate here is evaluated in exact arithmetic (``fractions.Fraction``
or plain integers); there is no tolerance parameter anywhere.
"""
from __future__ import annotations

import enum
import math
from fractions import Fraction
from functools import cmp_to_key
from typing import Iterable, NamedTuple, Sequence

from .errors import DegenerateApex, TargetEqualsOrigin

Rational = Fraction


class Point(NamedTuple):
    x: Fraction
    y: Fraction

    @classmethod
    def of(cls, x, y) -> "Point":
        return cls(Fraction(x), Fraction(y))

    def __sub__(self, other):  # type: ignore[override]
        return Point(self.x - other[0], self.y - other[1])

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other[0], self.y + other[1])


class Orientation(enum.IntEnum):
    CW = -1
    COLLINEAR = 0
    CCW = 1


def parse_rational(text) -> Fraction:
    """Parse a decimal (or ``p/q``) string exactly. Floats are rejected."""
    if isinstance(text, float):
        raise TypeError("floats are not accepted; pass a decimal string")
    return Fraction(text)


def format_rational(q: Fraction) -> str:
    """Decimal string when the expansion terminates, ``p/q`` otherwise."""
    q = Fraction(q)
    den = q.denominator
    twos = fives = 0
    while den % 2 == 0:
        den //= 2
        twos += 1
    while den % 5 == 0:
        den //= 5
        fives += 1
    if den != 1:
        return f"{q.numerator}/{q.denominator}"
    digits = max(twos, fives)
    if digits == 0:
        return str(q.numerator)
    scaled = abs(q.numerator) * (10**digits // q.denominator)
    sign = "-" if q < 0 else ""
    whole, frac = divmod(scaled, 10**digits)
    return f"{sign}{whole}.{frac:0{digits}d}"


def cross(u, v):
    return u[0] * v[1] - u[1] * v[0]


def dot(u, v):
    return u[0] * v[0] + u[1] * v[1]


def orientation(a, b, c) -> Orientation:
    """Sign of (b - a) x (c - a)."""
    s = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if s > 0:
        return Orientation.CCW
    if s < 0:
        return Orientation.CW
    return Orientation.COLLINEAR


def squared_distance(p, q) -> Fraction:
    dx = p[0] - q[0]
    dy = p[1] - q[1]
    return dx * dx + dy * dy


def _half(ref, v) -> int:
    # 0: on the reference ray, 1: strictly left of it, 2: opposite ray, 3: strictly right
    c = cross(ref, v)
    if c == 0:
        return 0 if dot(ref, v) > 0 else 2
    return 1 if c > 0 else 3


def compare_angles(ref, u, v) -> int:
    """Compare the counterclockwise angles of vectors ``u`` and ``v`` measured
    from direction ``ref``; returns -1, 0 or 1. Same-ray vectors compare equal."""
    hu, hv = _half(ref, u), _half(ref, v)
    if hu != hv:
        return -1 if hu < hv else 1
    c = cross(u, v)
    if c > 0:
        return -1
    if c < 0:
        return 1
    return 0


def _integer_vectors(vecs):
    # exact rescaling by the common denominator; angles are unchanged
    den = 1
    for x, y in vecs:
        den = math.lcm(den, Fraction(x).denominator, Fraction(y).denominator)
    out = []
    for x, y in vecs:
        x, y = Fraction(x), Fraction(y)
        out.append((x.numerator * (den // x.denominator), y.numerator * (den // y.denominator)))
    return out


def ccw_sort_indices(origin, reference_direction, targets: Sequence) -> list[int]:
    """Indices of ``targets`` in counterclockwise order around ``origin``,
    starting at ``reference_direction``; same-ray ties go nearest first."""
    if reference_direction[0] == 0 and reference_direction[1] == 0:
        raise ValueError("reference direction must be nonzero")
    vecs = []
    for t in targets:
        v = (t[0] - origin[0], t[1] - origin[1])
        if v[0] == 0 and v[1] == 0:
            raise TargetEqualsOrigin(f"target {tuple(t)} coincides with origin")
        vecs.append(v)
    vecs = _integer_vectors(vecs)
    ref = _integer_vectors([reference_direction])[0]

    def cmp(i, j):
        r = compare_angles(ref, vecs[i], vecs[j])
        if r:
            return r
        di, dj = dot(vecs[i], vecs[i]), dot(vecs[j], vecs[j])
        return (di > dj) - (di < dj)

    return sorted(range(len(vecs)), key=cmp_to_key(cmp))


def ccw_order_around(origin, reference_direction, targets: Iterable) -> list:
    """Sort ``targets`` counterclockwise around ``origin`` starting at
    ``reference_direction`` (a vector)."""
    targets = list(targets)
    return [targets[i] for i in ccw_sort_indices(origin, reference_direction, targets)]


def cone_contains(a, b, c, p) -> bool:
    """Is ``p`` in the cone with apex ``b`` swept counterclockwise from ray
    b->a to ray b->c (ray b->a included, ray b->c excluded)?

    ``a == c`` denotes the full turn around ``b``. Distinct ``a`` and ``c`` on
    one ray give an empty cone, so the cones between consecutive rotation
    entries always partition the directions around ``b``.
    """
    if a == b or c == b or p == b:
        raise DegenerateApex("cone apex coincides with a defining point")
    if a == c:
        return True
    u = (a[0] - b[0], a[1] - b[1])
    w = (c[0] - b[0], c[1] - b[1])
    q = (p[0] - b[0], p[1] - b[1])
    if _half(u, w) == 0:
        return False
    return compare_angles(u, q, w) < 0


def segments_intersect(p1, p2, q1, q2) -> bool:
    """Closed-segment intersection test."""
    o1 = orientation(p1, p2, q1)
    o2 = orientation(p1, p2, q2)
    o3 = orientation(q1, q2, p1)
    o4 = orientation(q1, q2, p2)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    return (
        (o1 == 0 and on_segment(p1, p2, q1))
        or (o2 == 0 and on_segment(p1, p2, q2))
        or (o3 == 0 and on_segment(q1, q2, p1))
        or (o4 == 0 and on_segment(q1, q2, p2))
    )


def on_segment(a, b, p) -> bool:
    """``p`` collinear with a, b is assumed; checks the bounding box."""
    return min(a[0], b[0]) <= p[0] <= max(a[0], b[0]) and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])


def point_on_segment(a, b, p) -> bool:
    return orientation(a, b, p) == Orientation.COLLINEAR and on_segment(a, b, p)


def lattice_points_on_segment(a, b) -> list[tuple[int, int]]:
    """All integer points on the closed segment ab (bounding-box enumeration)."""
    xs = range(math.ceil(min(a[0], b[0])), math.floor(max(a[0], b[0])) + 1)
    ys = range(math.ceil(min(a[1], b[1])), math.floor(max(a[1], b[1])) + 1)
    return [(x, y) for x in xs for y in ys if orientation(a, b, (x, y)) == 0]


def lex_less(p: Sequence, q: Sequence) -> bool:
    return (p[0], p[1]) < (q[0], q[1])

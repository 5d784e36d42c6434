"""JSON instance files.

``{"vertices": [{"x": "0.5", "y": "1.25"}, ...],
  "weights": [{"u": 0, "v": 1, "w": "3"}, ...],   # optional
  "edges": [[0, 1], ...]}                         # optional

Coordinates and weights are decimal (or ``p/q``) strings parsed exactly.
Without ``edges`` the unit-disk graph of the points is built; with it the
listed straight-line edges are used as given.
"""
from __future__ import annotations

import json
from fractions import Fraction
from pathlib import Path
from typing import Any

from .errors import InstanceFormatError
from .geograph import GeometricGraph, build_unit_disk_graph, graph_from_edges
from .geometry import Point, format_rational


def _rational(value: Any, where: str) -> Fraction:
    if not isinstance(value, (str, int)) or isinstance(value, bool):
        raise InstanceFormatError(f"{where}: expected a decimal string, got {type(value).__name__}")
    try:
        return Fraction(value)
    except (ValueError, ZeroDivisionError) as exc:
        raise InstanceFormatError(f"{where}: cannot parse {value!r}") from exc


def _index(value: Any, n: int, where: str) -> int:
    if not isinstance(value, int) or isinstance(value, bool) or not (0 <= value < n):
        raise InstanceFormatError(f"{where}: {value!r} is not a vertex index")
    return value


def graph_from_dict(data: dict) -> GeometricGraph:
    if not isinstance(data, dict) or not isinstance(data.get("vertices"), list):
        raise InstanceFormatError('instance must be an object with a "vertices" list')
    pts = []
    for i, item in enumerate(data["vertices"]):
        if not isinstance(item, dict):
            raise InstanceFormatError(f"vertices[{i}] must be an object")
        pts.append(Point(_rational(item.get("x"), f"vertices[{i}].x"), _rational(item.get("y"), f"vertices[{i}].y")))
    n = len(pts)
    weights = None
    if data.get("weights") is not None:
        weights = {}
        for i, item in enumerate(data["weights"]):
            u = _index(item.get("u"), n, f"weights[{i}].u")
            v = _index(item.get("v"), n, f"weights[{i}].v")
            weights[(u, v)] = _rational(item.get("w"), f"weights[{i}].w")
    if data.get("edges") is not None:
        edges = []
        for i, item in enumerate(data["edges"]):
            if not isinstance(item, list) or len(item) != 2:
                raise InstanceFormatError(f"edges[{i}] must be a pair of indices")
            edges.append((_index(item[0], n, f"edges[{i}][0]"), _index(item[1], n, f"edges[{i}][1]")))
        return graph_from_edges(pts, edges, weights)
    return build_unit_disk_graph(pts, weights)


def graph_to_dict(g: GeometricGraph, with_edges: bool | None = None) -> dict:
    out: dict = {"vertices": [{"x": format_rational(p.x), "y": format_rational(p.y)} for p in g.points]}
    if g.weights is not None:
        out["weights"] = [{"u": u, "v": v, "w": format_rational(w)} for (u, v), w in sorted(g.weights.items())]
    if with_edges or (with_edges is None and not g.unit_disk):
        out["edges"] = [list(e) for e in g.edges()]
    return out


def dumps(g: GeometricGraph) -> str:
    return json.dumps(graph_to_dict(g), indent=1) + "\n"


def load(path: str | Path) -> GeometricGraph:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise InstanceFormatError(f"cannot read {path}: {exc.strerror}") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise InstanceFormatError(f"{path}: invalid JSON ({exc.msg} at line {exc.lineno})") from exc
    return graph_from_dict(data)


def save(g: GeometricGraph, path: str | Path) -> None:
    Path(path).write_text(dumps(g), encoding="utf-8")


"""Graph file formats.

Text format (bit-exact):

    line 1:        n m
    next n lines:  x y          (decimal integer coordinates)
    next m lines:  i j          (0-based vertex indices, i < j)

A JSON mirror with fields ``vertices: [[x, y], ...]`` and
``edges: [[i, j], ...]`` is accepted interchangeably; files are sniffed by
their first non-space character.  Abstract ordered graphs (no
coordinates) exist only in JSON, marked ``"abstract": true``, carrying a
vertex ``order`` instead of coordinates.
"""

from __future__ import annotations

import json
from pathlib import Path

from .counting import OrderedMonotoneGraph
from .geometry import GraphError, PlaneGraph, Point


def dumps_text(g: PlaneGraph) -> str:
    lines = [f"{g.n} {g.m}"]
    lines += [f"{p.x} {p.y}" for p in g.vertices]
    lines += [f"{i} {j}" for i, j in g.edges]
    return "\n".join(lines) + "\n"


def loads_text(text: str) -> PlaneGraph:
    tokens = text.split()
    if len(tokens) < 2:
        raise GraphError("graph text too short")
    it = iter(tokens)
    try:
        n = int(next(it))
        m = int(next(it))
        pts = [Point(int(next(it)), int(next(it))) for _ in range(n)]
        edges = [(int(next(it)), int(next(it))) for _ in range(m)]
    except StopIteration:
        raise GraphError("graph text truncated") from None
    return PlaneGraph(pts, edges)


def dumps_json(g: PlaneGraph) -> str:
    return json.dumps(
        {
            "vertices": [[p.x, p.y] for p in g.vertices],
            "edges": [[i, j] for i, j in g.edges],
        }
    )


def dumps_abstract_json(omg: OrderedMonotoneGraph) -> str:
    edges = sorted(
        (min(q, v), max(q, v)) for v in range(omg.n) for q in omg.left[v]
    )
    return json.dumps(
        {
            "abstract": True,
            "n": omg.n,
            "order": list(omg.order),
            "edges": [[i, j] for i, j in edges],
        }
    )


def loads(text: str) -> PlaneGraph | OrderedMonotoneGraph:
    stripped = text.lstrip()
    if not stripped:
        raise GraphError("empty graph file")
    if stripped[0] != "{":
        return loads_text(text)
    data = json.loads(text)
    if data.get("abstract"):
        return OrderedMonotoneGraph.from_edges(
            int(data["n"]),
            [tuple(e) for e in data["edges"]],
            data.get("order"),
        )
    return PlaneGraph(
        [Point(int(x), int(y)) for x, y in data["vertices"]],
        [tuple(e) for e in data["edges"]],
    )


def load_path(path: str | Path) -> PlaneGraph | OrderedMonotoneGraph:
    return loads(Path(path).read_text(encoding="utf-8"))

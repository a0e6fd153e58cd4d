"""Exact integer geometry: points, direction vectors, and plane geometric graphs.

Everything here is integer arithmetic.  Coordinates are capped at 10**7 in
absolute value so that every 2x2 cross product of coordinate differences
(the orientation predicate, the segment-crossing tests, the direction
comparisons) fits comfortably in 64-bit signed arithmetic; Python ints do
not overflow anyway, but the cap keeps the numba fast paths valid too.

A ``PlaneGraph`` is a straight-line drawing: vertices are distinct integer
points and edges are segments that may meet only at shared endpoints.
``validate_plane`` checks that property exhaustively and reports every
violating edge pair.  ``scan_triangulation`` builds a triangulation of a
point set in general position by left-to-right incremental insertion,
connecting each new point to all hull vertices it sees; it is the random
instance generator behind the verification harness.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass
from typing import Iterable, Sequence

COORD_LIMIT = 10**7

LEFT = 1
RIGHT = -1
COLLINEAR = 0


class GraphError(ValueError):
    """Invalid geometric input (bad coordinates, malformed graph, ...)."""


class InvariantError(AssertionError):
    """An internal consistency check failed; indicates a bug, not bad input."""


@dataclass(frozen=True, order=True)
class Point:
    x: int
    y: int

    def __post_init__(self):
        if not (isinstance(self.x, int) and isinstance(self.y, int)):
            raise GraphError(f"point coordinates must be int, got {self!r}")
        if abs(self.x) > COORD_LIMIT or abs(self.y) > COORD_LIMIT:
            raise GraphError(f"|coordinate| exceeds {COORD_LIMIT}: {self!r}")

    def __sub__(self, other: "Point") -> "Vector":
        return Vector(self.x - other.x, self.y - other.y)


@dataclass(frozen=True)
class Vector:
    """An integer direction vector; zero only where explicitly allowed."""

    dx: int
    dy: int

    def __add__(self, other: "Vector") -> "Vector":
        return Vector(self.dx + other.dx, self.dy + other.dy)

    def __neg__(self) -> "Vector":
        return Vector(-self.dx, -self.dy)

    def is_zero(self) -> bool:
        return self.dx == 0 and self.dy == 0

    def dot(self, other: "Vector") -> int:
        return self.dx * other.dx + self.dy * other.dy

    def cross(self, other: "Vector") -> int:
        return self.dx * other.dy - self.dy * other.dx

    def rot_ccw(self) -> "Vector":
        """Rotate by +pi/2."""
        return Vector(-self.dy, self.dx)

    def rot_cw(self) -> "Vector":
        """Rotate by -pi/2."""
        return Vector(self.dy, -self.dx)

    def reduced(self) -> "Vector":
        """Divide out gcd(|dx|, |dy|), keeping orientation."""
        if self.is_zero():
            raise GraphError("cannot reduce the zero vector")
        g = math.gcd(abs(self.dx), abs(self.dy))
        return Vector(self.dx // g, self.dy // g)

    def axis_canonical(self) -> "Vector":
        """Canonical representative of the *line* spanned by this vector.

        Reduced by the gcd and sign-normalized so that (dy, dx) is
        lexicographically positive.  Idempotent; two vectors are parallel
        iff their canonical forms are equal.
        """
        v = self.reduced()
        if v.dy < 0 or (v.dy == 0 and v.dx < 0):
            v = -v
        return v


def orientation(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q-p) x (r-p).

    Returns LEFT (+1) if r lies to the left of the directed line p->q,
    RIGHT (-1) if to the right, COLLINEAR (0) if on the line.  Exact.
    """
    v = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    return (v > 0) - (v < 0)


def _on_segment(p: Point, a: Point, b: Point) -> bool:
    # p collinear with a-b assumed; is p within the closed segment?
    return min(a.x, b.x) <= p.x <= max(a.x, b.x) and min(a.y, b.y) <= p.y <= max(a.y, b.y)


def segments_conflict(a: Point, b: Point, c: Point, d: Point) -> bool:
    """True iff segments ab and cd intersect anywhere except a shared endpoint.

    The two segments are assumed to come from edges with all four endpoint
    *points* distinct unless they share an actual endpoint value.
    """
    shared = {a, b} & {c, d}
    if len(shared) == 2:
        return True  # same segment twice
    if len(shared) == 1:
        (s,) = shared
        p = b if a == s else a
        q = d if c == s else c
        # collinear and pointing the same way from the joint => overlap
        return orientation(s, p, q) == COLLINEAR and (p - s).dot(q - s) > 0
    d1 = orientation(c, d, a)
    d2 = orientation(c, d, b)
    d3 = orientation(a, b, c)
    d4 = orientation(a, b, d)
    if d1 != d2 and d3 != d4 and (d1 != 0 or d2 != 0) and (d3 != 0 or d4 != 0):
        return True  # proper crossing
    if d1 == 0 and _on_segment(a, c, d):
        return True
    if d2 == 0 and _on_segment(b, c, d):
        return True
    if d3 == 0 and _on_segment(c, a, b):
        return True
    if d4 == 0 and _on_segment(d, a, b):
        return True
    return False


class PlaneGraph:
    """Straight-line graph on integer points.

    Structural invariants (distinct points, no loops or duplicate edges,
    index bounds) are enforced at construction.  The non-crossing property
    is checked by :func:`validate_plane`, which is O(m^2) and therefore an
    explicit step rather than part of the constructor.  Instances are
    treated as immutable once built.
    """

    def __init__(self, vertices: Sequence[Point], edges: Iterable[tuple[int, int]]):
        self.vertices: tuple[Point, ...] = tuple(
            v if isinstance(v, Point) else Point(*v) for v in vertices
        )
        n = len(self.vertices)
        if len(set(self.vertices)) != n:
            raise GraphError("vertices must be distinct points")
        norm = []
        for i, j in edges:
            if not (0 <= i < n and 0 <= j < n):
                raise GraphError(f"edge ({i},{j}) out of range for n={n}")
            if i == j:
                raise GraphError(f"self-loop at vertex {i}")
            norm.append((i, j) if i < j else (j, i))
        if len(set(norm)) != len(norm):
            raise GraphError("duplicate edges")
        self.edges: tuple[tuple[int, int], ...] = tuple(sorted(norm))
        self._adj: tuple[tuple[int, ...], ...] | None = None

    @property
    def n(self) -> int:
        return len(self.vertices)

    @property
    def m(self) -> int:
        return len(self.edges)

    def adjacency(self) -> tuple[tuple[int, ...], ...]:
        if self._adj is None:
            lists: list[list[int]] = [[] for _ in range(self.n)]
            for i, j in self.edges:
                lists[i].append(j)
                lists[j].append(i)
            self._adj = tuple(tuple(sorted(l)) for l in lists)
        return self._adj

    def edge_vector(self, e: tuple[int, int]) -> Vector:
        i, j = e
        return self.vertices[j] - self.vertices[i]

    def __repr__(self) -> str:
        return f"PlaneGraph(n={self.n}, m={self.m})"


def validate_plane(g: PlaneGraph) -> list[tuple[tuple[int, int], tuple[int, int]]]:
    """Exact pairwise segment check; returns the complete violation list.

    An empty list means the drawing is plane.  Never stops at the first
    conflict: the verify workflow wants full diagnostics.
    """
    vs = g.vertices
    bad = []
    es = g.edges
    for s in range(len(es)):
        i, j = es[s]
        a, b = vs[i], vs[j]
        for t in range(s + 1, len(es)):
            k, l = es[t]
            if segments_conflict(a, b, vs[k], vs[l]):
                bad.append((es[s], es[t]))
    if not bad and g.n >= 3 and g.m > 3 * g.n - 6:
        raise InvariantError(f"plane graph with m={g.m} > 3n-6={3 * g.n - 6}")
    return bad


def parallel_classes(g: PlaneGraph) -> list[tuple[Vector, list[tuple[int, int]]]]:
    """Partition the edges into maximal sets of mutually parallel edges.

    Returns (canonical direction, edges) per class, ordered by first
    appearance of the class in the sorted edge list.
    """
    classes: dict[Vector, list[tuple[int, int]]] = {}
    for e in g.edges:
        d = g.edge_vector(e).axis_canonical()
        classes.setdefault(d, []).append(e)
    return list(classes.items())


def _collinear_triple(pts: list[Point]) -> tuple[int, int, int] | None:
    # pts sorted by x with distinct x; anchor each triple at its leftmost
    # point, where dx > 0 makes the reduced direction a canonical key
    xs = [p.x for p in pts]
    ys = [p.y for p in pts]
    gcd = math.gcd
    n = len(pts)
    for i in range(n):
        xi, yi = xs[i], ys[i]
        seen: dict[tuple[int, int], int] = {}
        for j in range(i + 1, n):
            dx = xs[j] - xi
            dy = ys[j] - yi
            g = gcd(dx, abs(dy))
            key = (dx // g, dy // g)
            if key in seen:
                return (i, seen[key], j)
            seen[key] = j
    return None


def scan_triangulation(points: Sequence[Point]) -> PlaneGraph:
    """Triangulate a point set by a left-to-right scan.

    Requires at least 3 points, pairwise distinct x-coordinates, and no 3
    collinear points (rejects otherwise, naming offenders).  Each point is
    inserted in x-order and connected to every hull vertex it sees.  The
    result is a triangulation with exactly 3n-3-h edges (h = hull size),
    asserted via Euler's relation, and it always contains the Hamiltonian
    path of the x-order.
    """
    pts = [p if isinstance(p, Point) else Point(*p) for p in points]
    if len(pts) < 3:
        raise GraphError("need at least 3 points")
    order = sorted(range(len(pts)), key=lambda i: pts[i].x)
    for a, b in zip(order, order[1:]):
        if pts[a].x == pts[b].x:
            raise GraphError(f"duplicate x-coordinate between vertices {a} and {b}")
    spts = [pts[i] for i in order]
    trip = _collinear_triple(spts)
    if trip is not None:
        i, j, k = (order[t] for t in trip)
        raise GraphError(f"collinear triple: vertices {i}, {j}, {k}")

    n = len(spts)
    edges: set[tuple[int, int]] = set()

    def connect(a: int, b: int) -> None:
        edges.add((a, b) if a < b else (b, a))

    # lower/upper hull chains of the processed prefix, in x-order
    lower = [0, 1]
    upper = [0, 1]
    connect(0, 1)
    for t in range(2, n):
        visible = set()
        while len(lower) >= 2 and orientation(spts[lower[-2]], spts[lower[-1]], spts[t]) <= 0:
            visible.add(lower.pop())
        visible.add(lower[-1])
        lower.append(t)
        while len(upper) >= 2 and orientation(spts[upper[-2]], spts[upper[-1]], spts[t]) >= 0:
            visible.add(upper.pop())
        visible.add(upper[-1])
        upper.append(t)
        for v in visible:
            connect(v, t)

    hull = len(lower) + len(upper) - 2
    expected = 3 * n - 3 - hull
    if len(edges) != expected:
        raise InvariantError(
            f"scan triangulation edge count {len(edges)} != 3n-3-h = {expected}"
        )
    # map scan indices back to the caller's vertex order
    return PlaneGraph(pts, [(order[a], order[b]) for a, b in edges])


def random_point_set(n: int, seed: int, coord_range: int = 10**6) -> list[Point]:
    """Seeded point set acceptable to scan_triangulation.

    Distinct x-coordinates by construction; resamples (deterministically)
    until no 3 points are collinear.
    """
    rng = random.Random(seed)
    for _ in range(1000):
        xs = rng.sample(range(-coord_range, coord_range + 1), n)
        pts = [Point(x, rng.randint(-coord_range, coord_range)) for x in xs]
        spts = sorted(pts)
        if _collinear_triple(spts) is None:
            return pts
    raise GraphError(f"could not sample {n} points in general position (seed={seed})")


def random_scan_triangulation(n: int, seed: int, coord_range: int = 10**6) -> PlaneGraph:
    return scan_triangulation(random_point_set(n, seed, coord_range))

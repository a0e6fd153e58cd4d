"""Sweep directions sufficient for every monotone path in a plane graph.

Each parallel class of edges contributes two opposite normal vectors.  Sort
all normals by argument; between two cyclically consecutive normals every
direction sees the same set of positively-oriented edges, so one
representative per gap suffices.  The vector sum of the two bounding
normals lies strictly inside the gap and is that representative.  Crossing
a normal while rotating counterclockwise flips the orientation of exactly
one parallel class, which is the class counted as "newly monotone" at the
representative direction just after it.

All comparisons are exact: arguments are compared by an 8-region index
(positive x-axis, open quadrant I, positive y-axis, ...) refined by the
cross product, never by floating-point angles.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cmp_to_key

from .geometry import GraphError, InvariantError, PlaneGraph, Vector, parallel_classes


def argument_region(v: Vector) -> int:
    """Index 0..7 of the axis or open quadrant containing v's argument."""
    if v.is_zero():
        raise GraphError("zero vector has no argument")
    dx, dy = v.dx, v.dy
    if dy == 0:
        return 0 if dx > 0 else 4
    if dy > 0:
        if dx > 0:
            return 1
        return 2 if dx == 0 else 3
    if dx < 0:
        return 5
    return 6 if dx == 0 else 7


def argument_less(a: Vector, b: Vector) -> bool:
    """Exact comparison of vector arguments in [0, 2*pi)."""
    ra, rb = argument_region(a), argument_region(b)
    if ra != rb:
        return ra < rb
    return a.cross(b) > 0


def _argument_cmp(a: Vector, b: Vector) -> int:
    ra, rb = argument_region(a), argument_region(b)
    if ra != rb:
        return -1 if ra < rb else 1
    c = a.cross(b)
    return (c < 0) - (c > 0)


def _argsorted(vs: list) -> list:
    key = cmp_to_key(lambda p, q: _argument_cmp(p[0], q[0]))
    return sorted(vs, key=key)


@dataclass
class DirectionSet:
    """The cyclically ordered sweep directions of a graph.

    ``directions[0]`` is the minimum-argument member (argument origin fixed
    at the positive x-axis).  ``flip_class[i]`` is the index into
    ``classes`` of the parallel class that becomes monotone at
    ``directions[i]``; the entry for index 0 records the class of the
    normal opening that gap but is not consumed by the counting sweep.
    An edgeless graph yields the empty marker (no directions).
    """

    directions: list[Vector] = field(default_factory=list)
    flip_class: list[int] = field(default_factory=list)
    classes: list[tuple[Vector, list[tuple[int, int]]]] = field(default_factory=list)

    @property
    def u0(self) -> Vector | None:
        return self.directions[0] if self.directions else None

    def __len__(self) -> int:
        return len(self.directions)

    def flip_edges(self, i: int) -> list[tuple[int, int]]:
        return self.classes[self.flip_class[i]][1]


def build_direction_set(g: PlaneGraph, check: bool | None = None) -> DirectionSet:
    """Construct the sweep directions of g.

    ``check`` forces (or suppresses) the quadratic self-check that no
    direction is orthogonal to any edge; by default it runs only on small
    graphs, since the property holds by construction.
    """
    classes = parallel_classes(g)
    if not classes:
        return DirectionSet()

    # two opposite normals per class, tagged with the class index
    normals: list[tuple[Vector, int]] = []
    for ci, (d, _) in enumerate(classes):
        normals.append((d.rot_ccw(), ci))
        normals.append((d.rot_cw(), ci))
    normals = _argsorted(normals)
    for (a, _), (b, _) in zip(normals, normals[1:]):
        if a.cross(b) == 0 and a.dot(b) > 0:
            raise InvariantError(f"duplicate normal direction {a}")

    s = len(normals)
    members: list[tuple[Vector, int]] = []
    for i in range(s):
        a, ca = normals[i]
        b, _ = normals[(i + 1) % s]
        u = a + b
        if u.is_zero():
            # antipodal normals (single parallel class): the class's own
            # direction sits strictly inside the half-turn gap
            u = a.rot_ccw()
        members.append((u.reduced(), ca))

    members = _argsorted(members)
    ds = DirectionSet(
        directions=[u for u, _ in members],
        flip_class=[c for _, c in members],
        classes=classes,
    )

    if len(set((u.dx, u.dy) for u in ds.directions)) != len(ds):
        raise InvariantError("sweep directions are not pairwise distinct")
    if g.n >= 3 and len(ds) > 6 * g.n - 12:
        raise InvariantError(f"|U| = {len(ds)} exceeds 6n-12 = {6 * g.n - 12}")
    if len(ds) != 2 * len(classes):
        raise InvariantError("|U| must be twice the number of parallel classes")
    if check is None:
        check = len(classes) <= 400
    if check:
        for u in ds.directions:
            for d, _ in classes:
                if u.dot(d) == 0:
                    raise InvariantError(f"direction {u} orthogonal to class {d}")
    return ds


def projection_key(g: PlaneGraph, u: Vector):
    vs = g.vertices
    return lambda i: (u.dx * vs[i].x + u.dy * vs[i].y, i)


def sorted_order(g: PlaneGraph, u: Vector) -> list[int]:
    """Vertex indices by increasing <v, u>, ties broken by index."""
    if u.is_zero():
        raise GraphError("sort direction must be nonzero")
    return sorted(range(g.n), key=projection_key(g, u))


def arrangement_orders(g: PlaneGraph, ds: DirectionSet) -> list[list[int]]:
    """All |U| sorted orders in O(n^2) total.

    Walks the directions in cyclic order, maintaining the current order and
    repairing it by adjacent transpositions.  Each transposition is one
    vertex of the dual line arrangement crossed between two consecutive
    query directions; a vertex pair swaps O(1) times over the full turn,
    so the total work beyond the initial sort is O(n^2).  The returned
    orders are identical to per-direction ``sorted_order`` calls.
    """
    vs = g.vertices
    orders: list[list[int]] = []
    order: list[int] = []
    for di, u in enumerate(ds.directions):
        proj = [u.dx * v.x + u.dy * v.y for v in vs]
        if di == 0:
            order = sorted(range(g.n), key=lambda i: (proj[i], i))
        else:
            for t in range(1, len(order)):
                v = order[t]
                pv = proj[v]
                s = t - 1
                while s >= 0 and (proj[order[s]], order[s]) > (pv, v):
                    order[s + 1] = order[s]
                    s -= 1
                order[s + 1] = v
        orders.append(order.copy())
    return orders

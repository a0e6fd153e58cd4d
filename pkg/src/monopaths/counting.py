"""Counting and enumeration of monotone paths.

The x-monotone core is the classic left-to-right sweep: m(v), the number
of directed nonempty x-monotone paths ending at v, satisfies

    m(v) = sum over left neighbors q of v of (m(q) + 1),

and the total is the sum of all m(v).  A path of t vertices is counted
once, at its last vertex; the "+1" is the single-edge path (q, v).

For the all-directions total, the graph is swept once per direction in the
sufficient set U (see :mod:`monopaths.directions`).  At the minimum-argument
direction u0 the full count m is taken; at every later direction u exactly
one parallel class E_u of edges becomes monotone, so only paths through
E_u are new.  Those are counted by the companion quantity gamma(v), the
number of u-monotone paths ending at v that contain an edge of E_u:

    gamma(v) = 1 + m(a) + sum over other left neighbors q of gamma(q)
                       if the edge (a, v) in E_u enters v positively,
    gamma(v) = sum over left neighbors q of gamma(q)    otherwise.

A path whose feasible cone of directions contains u0 is already counted
there, yet the cone may wrap around the argument origin and still contain
a later direction u at which the path's last-flipped class is newly
monotone; gamma alone would count it twice.  The overlap is exactly the
set of paths all of whose edges are positive under *both* u0 and u and
that traverse E_u, so each direction's new-path count is gamma minus the
same recurrence run on the doubly-positive subgraph.  With that
correction every directed monotone path is counted at exactly one
direction, and each undirected path appears in two directed orientations,
so the undirected total is half the directed total (evenness asserted).

Counts are plain Python ints (they grow exponentially in n).  This module
is the readable reference engine; :mod:`monopaths.fastcount` provides the
equivalent quadratic-time bulk engine used for large instances.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Iterable, Iterator, Sequence

from .directions import DirectionSet, build_direction_set, sorted_order
from .geometry import GraphError, InvariantError, PlaneGraph, Vector


@dataclass
class OrderedMonotoneGraph:
    """A graph together with a sweep order.

    ``left[v]`` lists the neighbors of v that precede it in the order,
    sorted by sweep position; it is what the recurrences consume.  The
    graph may be abstract (no coordinates): x-monotone counting only needs
    the order and the adjacency.
    """

    n: int
    order: tuple[int, ...]
    left: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        # the position check alone forces antisymmetry of the relation
        pos = self.position()
        for v, ls in enumerate(self.left):
            if len(set(ls)) != len(ls):
                raise GraphError(f"duplicate left neighbor at vertex {v}")
            for q in ls:
                if pos[q] >= pos[v]:
                    raise GraphError(f"left neighbor {q} of {v} is not earlier in order")

    def position(self) -> list[int]:
        pos = [0] * self.n
        for t, v in enumerate(self.order):
            pos[v] = t
        return pos

    def right(self) -> list[list[int]]:
        out: list[list[int]] = [[] for _ in range(self.n)]
        for v, ls in enumerate(self.left):
            for q in ls:
                out[q].append(v)
        return out

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        order: Sequence[int] | None = None,
    ) -> "OrderedMonotoneGraph":
        order = tuple(range(n)) if order is None else tuple(order)
        pos = [0] * n
        for t, v in enumerate(order):
            pos[v] = t
        left: list[list[int]] = [[] for _ in range(n)]
        for i, j in edges:
            a, b = (i, j) if pos[i] < pos[j] else (j, i)
            left[b].append(a)
        for v in range(n):
            left[v].sort(key=lambda q: pos[q])
        return cls(n, order, tuple(tuple(l) for l in left))

    @classmethod
    def from_plane_graph(cls, g: PlaneGraph, u: Vector) -> "OrderedMonotoneGraph":
        """Sweep view of a geometric graph in direction u.

        Edges orthogonal to u cannot lie on a u-monotone path and are
        dropped; for sweep-set directions no edge is ever orthogonal.
        """
        vs = g.vertices
        proj = [u.dx * p.x + u.dy * p.y for p in vs]
        order = sorted_order(g, u)
        edges = [(i, j) for i, j in g.edges if proj[i] != proj[j]]
        return cls.from_edges(g.n, edges, order)


@dataclass
class PathTally:
    """Arbitrary-precision per-vertex counts plus their defined total."""

    per_vertex: list[int]
    total: int


def count_x_monotone(omg: OrderedMonotoneGraph) -> PathTally:
    """Directed nonempty sweep-monotone paths, counted at their last vertex."""
    m = [0] * omg.n
    for v in omg.order:
        m[v] = sum(m[q] + 1 for q in omg.left[v])
    return PathTally(m, sum(m))


def count_maximal_x_monotone(omg: OrderedMonotoneGraph) -> PathTally:
    """Maximal sweep-monotone paths.

    A path with at least one edge is maximal iff it starts at a vertex with
    no left neighbor and ends at one with no right neighbor.  One-vertex
    paths are counted exactly for isolated vertices (no neighbors on either
    side).  per_vertex holds the count of maximal paths ending at each
    vertex.
    """
    right = omg.right()
    source = [len(omg.left[v]) == 0 for v in range(omg.n)]
    s = [0] * omg.n
    for v in omg.order:
        s[v] = sum(s[q] + (1 if source[q] else 0) for q in omg.left[v])
    per = [0] * omg.n
    for v in range(omg.n):
        if not right[v]:
            per[v] = s[v] + (1 if source[v] else 0)  # source+sink = isolated
    return PathTally(per, sum(per))


def enumerate_x_monotone(omg: OrderedMonotoneGraph) -> Iterator[tuple[int, ...]]:
    """Yield every directed nonempty sweep-monotone path exactly once.

    Canonical emission order: end vertex in sweep order, then predecessors
    recursively (each path precedes its leftward extensions).
    """

    def back(cur: int, path: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
        for q in omg.left[cur]:
            ext = (q,) + path
            yield ext
            yield from back(q, ext)

    for v in omg.order:
        yield from back(v, (v,))


@dataclass
class MonotoneCountReport:
    """Result of the all-directions count."""

    n: int
    m: int
    directed_total: int
    undirected_total: int
    per_direction: list[tuple[Vector, int]] = field(repr=False)

    def to_json_dict(self) -> dict:
        return {
            "n": self.n,
            "m": self.m,
            "directed_total": self.directed_total,
            "undirected_total": self.undirected_total,
            "per_direction": [
                {"u": [u.dx, u.dy], "new_paths": c} for u, c in self.per_direction
            ],
        }


def _flip_tails(
    g: PlaneGraph, pos: list[int], edges: list[tuple[int, int]]
) -> dict[int, int]:
    """Map head -> tail for the class edges oriented positively in u.

    In a plane straight-line graph at most one positively oriented class
    edge can enter a vertex (two would overlap); asserted here.
    """
    tails: dict[int, int] = {}
    for i, j in edges:
        a, b = (i, j) if pos[i] < pos[j] else (j, i)
        if b in tails:
            raise InvariantError(f"two parallel edges enter vertex {b}")
        tails[b] = a
    return tails


def _gamma_sweep(
    adj: Sequence[Sequence[int]],
    order: list[int],
    pos: list[int],
    tails: dict[int, int],
    u0_positive,
) -> int:
    """New monotone paths at one sweep direction.

    Runs the m/gamma recurrences over the direction's DAG and, in the same
    pass, over the sub-DAG of edges also positive under u0 (m2/gamma2).
    The latter counts the paths already covered at u0 whose cone wraps
    around to this direction; the number of genuinely new paths is the
    difference of the gamma totals.
    """
    n = len(order)
    m = [0] * n
    gam = [0] * n
    m2 = [0] * n
    gam2 = [0] * n
    total = 0
    total2 = 0
    for v in order:
        pv = pos[v]
        a = tails.get(v, -1)
        acc_m = 0
        acc_g = 0
        acc_m2 = 0
        acc_g2 = 0
        for q in adj[v]:
            if pos[q] < pv:
                acc_m += m[q] + 1
                acc_g += (m[q] + 1) if q == a else gam[q]
                if u0_positive(q, v):
                    acc_m2 += m2[q] + 1
                    acc_g2 += (m2[q] + 1) if q == a else gam2[q]
        m[v] = acc_m
        gam[v] = acc_g
        m2[v] = acc_m2
        gam2[v] = acc_g2
        total += acc_g
        total2 += acc_g2
    if total2 > total:
        raise InvariantError("overlap count exceeds gamma total")
    return total - total2


def count_monotone_all(
    g: PlaneGraph, arrangement: bool = False, ds: DirectionSet | None = None
) -> MonotoneCountReport:
    """Count directed and undirected monotone paths over all directions.

    With ``arrangement=False`` (default) each direction is sorted
    independently, O(n^2 log n) overall; this is the simple reference path.
    With ``arrangement=True`` the quadratic bulk engine of
    :mod:`monopaths.fastcount` is used instead: sorted orders come from one
    rotational sweep of the dual arrangement and the per-vertex counts are
    carried in fixed-width limb vectors.  Both produce identical reports.
    """
    if ds is None:
        ds = build_direction_set(g)
    if len(ds) == 0:
        return MonotoneCountReport(g.n, g.m, 0, 0, [])

    if arrangement:
        from . import fastcount

        per = fastcount.per_direction_counts(g, ds)
    else:
        adj = g.adjacency()
        vs = g.vertices
        u0 = ds.directions[0]

        def u0_positive(q: int, v: int) -> bool:
            return u0.dx * (vs[v].x - vs[q].x) + u0.dy * (vs[v].y - vs[q].y) > 0

        per = []
        for di, u in enumerate(ds.directions):
            order = sorted_order(g, u)
            pos = [0] * g.n
            for t, v in enumerate(order):
                pos[v] = t
            if di == 0:
                m = [0] * g.n
                for v in order:
                    m[v] = sum(m[q] + 1 for q in adj[v] if pos[q] < pos[v])
                per.append(sum(m))
            else:
                tails = _flip_tails(g, pos, ds.flip_edges(di))
                per.append(_gamma_sweep(adj, order, pos, tails, u0_positive))

    directed = sum(per)
    if directed % 2:
        raise InvariantError(f"directed total {directed} is odd")
    return MonotoneCountReport(
        g.n, g.m, directed, directed // 2, list(zip(ds.directions, per))
    )


def enumerate_monotone_all(
    g: PlaneGraph, dedupe: bool = False, ds: DirectionSet | None = None
) -> Iterator[tuple[int, ...]]:
    """Yield each directed monotone path exactly once across all directions.

    At u0 all u0-monotone paths are emitted; at every later direction only
    the paths using a newly monotone edge, minus those whose direction cone
    wraps around to contain u0 (they were already emitted there).  With
    ``dedupe`` every undirected path is emitted once, as its
    lexicographically smaller orientation.
    """
    if ds is None:
        ds = build_direction_set(g)
    adj = g.adjacency()
    vs = g.vertices

    def emit(path: tuple[int, ...]) -> bool:
        return not dedupe or path <= path[::-1]

    for di, u in enumerate(ds.directions):
        order = sorted_order(g, u)
        pos = [0] * g.n
        for t, v in enumerate(order):
            pos[v] = t
        left: list[list[int]] = [[] for _ in range(g.n)]
        for v in range(g.n):
            left[v] = sorted((q for q in adj[v] if pos[q] < pos[v]), key=lambda q: pos[q])

        if di == 0:

            def back(cur: int, path: tuple[int, ...]) -> Iterator[tuple[int, ...]]:
                for q in left[cur]:
                    ext = (q,) + path
                    if emit(ext):
                        yield ext
                    yield from back(q, ext)

            for v in order:
                yield from back(v, (v,))
        else:
            tails = _flip_tails(g, pos, ds.flip_edges(di))
            u0 = ds.directions[0]
            gam = [0] * g.n
            m = [0] * g.n
            for v in order:
                a = tails.get(v, -1)
                m[v] = sum(m[q] + 1 for q in left[v])
                gam[v] = sum((m[q] + 1) if q == a else gam[q] for q in left[v])

            def u0_pos(q: int, v: int) -> bool:
                return u0.dx * (vs[v].x - vs[q].x) + u0.dy * (vs[v].y - vs[q].y) > 0

            def gback(
                cur: int, path: tuple[int, ...], satisfied: bool, in_u0: bool
            ) -> Iterator[tuple[int, ...]]:
                # in_u0: every edge so far is also u0-positive, meaning the
                # path was already emitted during the u0 pass
                for q in left[cur]:
                    sat = satisfied or tails.get(cur, -1) == q
                    if not sat and gam[q] == 0:
                        continue
                    ext = (q,) + path
                    still = in_u0 and u0_pos(q, cur)
                    if sat and not still and emit(ext):
                        yield ext
                    yield from gback(q, ext, sat, still)

            for v in order:
                if gam[v]:
                    yield from gback(v, (v,), False, True)

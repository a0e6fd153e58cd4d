"""Named constructions used as fixtures and growth probes.

``lower_bound_graph`` builds the layered doubling graph on n = 2**level + 2
vertices: the spine path 0..n-1 plus, for every k with 2**k < n, the jump
edges (j, j + 2**k) at exactly the start indices j that are congruent to 0
or 1 mod 2**k.  The graph is kept abstract (an ordered monotone graph with
above/below edge labels) rather than embedded with coordinates; x-monotone
counting only needs the order, and any non-crossing labeling gives the
same counts.  Its directed x-monotone path count grows roughly like
1.7**n, which ``growth_probe`` measures via n-th roots.

``square_with_diagonal`` is the 4-point unit square with one diagonal, the
smallest instance separating weak from strict monotonicity.
"""

from __future__ import annotations

from dataclasses import dataclass
from decimal import Decimal, getcontext

from .counting import (
    OrderedMonotoneGraph,
    count_maximal_x_monotone,
    count_x_monotone,
)
from .geometry import GraphError, InvariantError, PlaneGraph, Point


def _noncrossing(chords: list[tuple[int, int]]) -> bool:
    """Stack check that no two chords interleave (a < c < b < d)."""
    by_open: dict[int, list[int]] = {}
    closers: dict[int, list[int]] = {}
    for a, b in chords:
        by_open.setdefault(a, []).append(b)
        closers.setdefault(b, []).append(a)
    stack: list[int] = []
    hi = max((b for _, b in chords), default=-1)
    for p in range(hi + 1):
        for _ in closers.get(p, []):
            if not stack or stack[-1] != p:
                return False
            stack.pop()
        for b in sorted(by_open.get(p, []), reverse=True):
            stack.append(b)
    return not stack


@dataclass
class LowerBoundGraph:
    level: int
    omg: OrderedMonotoneGraph
    above: list[tuple[int, int]]
    below: list[tuple[int, int]]

    @property
    def n(self) -> int:
        return self.omg.n


def _jump_starts(n: int, step: int, residue: int) -> list[int]:
    return list(range(residue, n - step, step))


def lower_bound_graph(level: int) -> LowerBoundGraph:
    """The doubling construction at the given level (n = 2**level + 2).

    Jump edges (j, j + 2**k) exist iff j = 0 or 1 (mod 2**k); the j = 0
    family is drawn above the spine and the j = 1 family below, which is
    the unique residue split keeping each side crossing-free (edges within
    one family and one k share endpoints or nest, and across k the start
    residues cannot interleave).  Both sides are verified by a crossing
    check; failure would mean the construction rule was transcribed wrong.
    """
    if not (1 <= level <= 20):
        raise GraphError(f"level must be in 1..20, got {level}")
    n = 2**level + 2
    above: list[tuple[int, int]] = []
    below: list[tuple[int, int]] = []
    edges: list[tuple[int, int]] = [(i, i + 1) for i in range(n - 1)]
    k = 1
    while 2**k < n:
        step = 2**k
        for j in range(0, n - step):
            if j % step == 0:
                above.append((j, j + step))
            elif j % step == 1:
                below.append((j, j + step))
        k += 1
    for side, name in ((above, "above"), (below, "below")):
        if not _noncrossing(side):
            raise InvariantError(f"lower-bound {name} side has crossing chords")
    edges += above + below
    omg = OrderedMonotoneGraph.from_edges(n, edges)
    degs = [len(omg.left[v]) for v in range(n)]
    right = omg.right()
    for v in range(n):
        if degs[v] + len(right[v]) > 2 + 2 * level:
            raise InvariantError(f"vertex {v} degree exceeds the O(log n) bound")
    return LowerBoundGraph(level, omg, above, below)


def lower_bound_edges_tabular(level: int) -> set[tuple[int, int]]:
    """Second, table-driven construction of the same edge set.

    Enumerates each jump family from explicit residue arithmetic ranges
    instead of testing j mod 2**k; used to cross-check the rule.
    """
    n = 2**level + 2
    edges = {(i, i + 1) for i in range(n - 1)}
    k = 1
    while 2**k < n:
        step = 2**k
        for j in _jump_starts(n, step, 0) + _jump_starts(n, step, 1):
            edges.add((j, j + step))
        k += 1
    return edges


def nth_root(total: int, n: int, places: int = 4) -> Decimal:
    """total**(1/n) as a Decimal with the given number of places."""
    if total <= 0:
        return Decimal(0)
    getcontext().prec = 50
    root = (Decimal(total).ln() / n).exp()
    return root.quantize(Decimal(1).scaleb(-places))


def growth_probe(levels: range | list[int]) -> list[tuple[int, int, Decimal, int, Decimal]]:
    """(n, directed total, its n-th root, maximal total, its root) per level.

    The directed x-monotone count approaches the asymptotic growth base
    from above (the quadratic mass of short paths inflates small n); the
    maximal-path count approaches the same base from below, so its root
    column is the nondecreasing one.
    """
    rows = []
    for level in levels:
        if level > 16:
            raise GraphError("growth probe capped at level 16")
        lbg = lower_bound_graph(level)
        total = count_x_monotone(lbg.omg).total
        maximal = count_maximal_x_monotone(lbg.omg).total
        rows.append(
            (lbg.n, total, nth_root(total, lbg.n), maximal, nth_root(maximal, lbg.n))
        )
    return rows


def square_with_diagonal() -> PlaneGraph:
    """Unit square labeled counterclockwise from the origin, plus one diagonal.

    Vertices 0..3 stand for the corner labels 1..4; the diagonal joins
    corners 1 and 3 (indices 0 and 2).
    """
    return PlaneGraph(
        [Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)],
        [(0, 1), (1, 2), (2, 3), (0, 3), (0, 2)],
    )

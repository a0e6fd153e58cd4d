"""Brute-force reference implementations for verification.

A directed path is monotone iff all its edge vectors fit in an open
half-plane, i.e. iff some cyclic gap between consecutive edge directions
(sorted by argument) strictly exceeds pi.  The weak variant uses the
closed half-plane: a gap of exactly pi suffices, which makes a path of two
exactly opposite edge vectors weakly monotone (any u orthogonal to both
has inner product 0 with each) even though no strictly monotone direction
exists.  Both tests are exact integer computations.

``brute_force_paths`` enumerates simple paths by DFS with prefix pruning;
both monotonicity properties are prefix-closed (dropping the last edge
only removes constraints), so pruning is sound.  These routines are the
independent side of every engine-versus-oracle check and deliberately
share no code with the sweep recurrences.
"""

from __future__ import annotations

from typing import Iterable, Sequence

from .counting import OrderedMonotoneGraph
from .directions import _argsorted
from .geometry import PlaneGraph, Vector


class CapExceeded(ValueError):
    """Instance too large for exhaustive search."""


def _gap_verdict(vectors: Iterable[Vector]) -> tuple[bool, bool]:
    """(strict, weak) half-plane feasibility of a set of direction vectors."""
    rays: dict[tuple[int, int], Vector] = {}
    for v in vectors:
        r = v.reduced()
        rays[(r.dx, r.dy)] = r
    vs = [v for v, _ in _argsorted([(r, None) for r in rays.values()])]
    s = len(vs)
    if s == 0:
        return True, True
    if s == 1:
        return True, True
    strict = weak = False
    for i in range(s):
        a = vs[i]
        b = vs[(i + 1) % s]
        c = a.cross(b)
        if c < 0:  # ccw gap from a to b exceeds pi
            strict = True
            weak = True
        elif c == 0 and a.dot(b) < 0:  # consecutive antipodal rays: gap is exactly pi
            weak = True
    return strict, weak


def _edge_vectors(g: PlaneGraph, path: Sequence[int]) -> list[Vector]:
    return [g.vertices[b] - g.vertices[a] for a, b in zip(path, path[1:])]


def is_monotone(g: PlaneGraph, path: Sequence[int]) -> bool:
    """True iff some u has strictly positive inner product with every edge."""
    vecs = _edge_vectors(g, path)
    if not vecs:
        return True
    return _gap_verdict(vecs)[0]


def is_weakly_monotone(g: PlaneGraph, path: Sequence[int]) -> bool:
    """True iff some nonzero u has nonnegative inner product with every edge."""
    vecs = _edge_vectors(g, path)
    if not vecs:
        return True
    return _gap_verdict(vecs)[1]


def brute_force_paths(
    g: PlaneGraph,
    mode: str = "strict",
    orientation: str = "directed",
    cap: int = 14,
    collect: bool = False,
) -> tuple[int, list[tuple[int, ...]] | None]:
    """Exhaustively enumerate (weakly) monotone simple paths with >= 1 edge.

    DFS over simple paths from every start vertex, pruning any prefix that
    fails the mode's half-plane test.  In undirected orientation only the
    lexicographically smaller of the two traversals of a path is kept.
    Refuses instances with n above the cap.
    """
    if mode not in ("strict", "weak"):
        raise ValueError(f"mode must be strict or weak, not {mode!r}")
    if orientation not in ("directed", "undirected"):
        raise ValueError(f"orientation must be directed or undirected, not {orientation!r}")
    if g.n > cap:
        raise CapExceeded(f"n={g.n} exceeds the oracle cap {cap}")
    want = 0 if mode == "strict" else 1
    adj = g.adjacency()
    found: list[tuple[int, ...]] = []
    count = 0

    def keep(path: tuple[int, ...]) -> bool:
        return orientation == "directed" or path <= path[::-1]

    def dfs(path: list[int], vecs: list[Vector]) -> None:
        nonlocal count
        cur = path[-1]
        for w in adj[cur]:
            if w in path:
                continue
            vecs.append(g.vertices[w] - g.vertices[cur])
            if _gap_verdict(vecs)[want]:
                path.append(w)
                t = tuple(path)
                if keep(t):
                    count += 1
                    if collect:
                        found.append(t)
                dfs(path, vecs)
                path.pop()
            vecs.pop()

    for start in range(g.n):
        dfs([start], [])
    return count, (found if collect else None)


def count_dag_paths(omg: OrderedMonotoneGraph) -> int:
    """Directed paths (>= 1 edge) in the sweep DAG, by plain enumeration.

    Walks every path explicitly, no memoization: an independent check for
    the x-monotone counting recurrence on abstract ordered graphs.
    """
    right = omg.right()

    def walk(v: int) -> int:
        total = 0
        for w in right[v]:
            total += 1 + walk(w)
        return total

    return sum(walk(v) for v in range(omg.n))

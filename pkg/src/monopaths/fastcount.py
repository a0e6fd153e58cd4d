"""Bulk all-directions counting in quadratic time.

The reference engine in :mod:`monopaths.counting` sorts vertices per
direction and runs the m/gamma recurrences on Python ints.  That is fine
up to a few hundred vertices; at n = 2000 there are ~12000 directions and
the per-vertex counts carry hundreds of digits, so the work must happen
inside compiled code.

Two ideas:

* Sorted orders come from one rotational sweep.  Processing the sweep
  directions in cyclic order, the order of vertex projections changes by
  adjacent transpositions only; repairing the previous order by insertion
  costs O(n + swaps) per direction, and every vertex pair swaps O(1)
  times over the full turn, so all orders together cost O(n^2).  This is
  the dual line arrangement traced implicitly: each transposition is one
  arrangement vertex between two consecutive query verticals.

* Counts are fixed-width little-endian uint64 limb vectors with tracked
  effective lengths (a count is at most 2**n, so width scales with n).
  Additions touch only significant limbs.

The kernel returns one limb row per direction (the new-path total at that
direction, i.e. the gamma total minus the wrap-around overlap, m-total at
u0); Python reassembles arbitrary-precision ints from the rows.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .directions import DirectionSet
from .geometry import InvariantError, PlaneGraph


@njit(cache=True, inline="always")
def _add_big(dst, de, src, se):
    """dst += src over uint64 limbs; returns the new effective length."""
    top = de if de > se else se
    carry = np.uint64(0)
    for i in range(top):
        a = dst[i]
        s = a + src[i]
        c = np.uint64(1) if s < a else np.uint64(0)
        s2 = s + carry
        if s2 < s:
            c = np.uint64(1)
        dst[i] = s2
        carry = c
    if carry != np.uint64(0):
        dst[top] = carry
        return top + 1
    return top


@njit(cache=True, inline="always")
def _add_one(dst, de):
    i = 0
    while True:
        dst[i] += np.uint64(1)
        if dst[i] != np.uint64(0):
            break
        i += 1
    return de if de > i + 1 else i + 1


@njit(cache=True)
def _count_kernel(
    n,
    L,
    indptr,
    indices,
    ux,
    uy,
    u0x,
    u0y,
    xs,
    ys,
    f_indptr,
    f_a,
    f_b,
    use_sweep,
    totals,
    teff,
):
    """Per-direction new-path totals, as limb rows in ``totals``.

    Direction 0 contributes its full m-total; every later direction the
    gamma total minus the doubly-monotone overlap with direction 0.
    Overlap rows are accumulated into a scratch row and subtracted by the
    caller (counts stay nonnegative; the subtraction is done in Python on
    exact ints).  Returns 0 on success, an error code otherwise.
    """
    ndir = ux.shape[0]
    m = np.zeros((n, L), np.uint64)
    me = np.zeros(n, np.int64)
    g = np.zeros((n, L), np.uint64)
    ge = np.zeros(n, np.int64)
    m2 = np.zeros((n, L), np.uint64)
    m2e = np.zeros(n, np.int64)
    g2 = np.zeros((n, L), np.uint64)
    g2e = np.zeros(n, np.int64)
    order = np.empty(n, np.int64)
    pos = np.empty(n, np.int64)
    proj = np.empty(n, np.int64)
    tail = np.full(n, -1, np.int64)

    for d in range(ndir):
        dx = ux[d]
        dy = uy[d]
        for v in range(n):
            proj[v] = dx * xs[v] + dy * ys[v]
        if d == 0 or not use_sweep:
            srt = np.argsort(proj, kind="mergesort")
            for t in range(n):
                order[t] = srt[t]
        else:
            for t in range(1, n):
                v = order[t]
                pv = proj[v]
                s = t - 1
                while s >= 0:
                    w = order[s]
                    if proj[w] > pv or (proj[w] == pv and w > v):
                        order[s + 1] = w
                        s -= 1
                    else:
                        break
                order[s + 1] = v
        for t in range(n):
            pos[order[t]] = t

        # reset the per-vertex limb accumulators touched last round
        for v in range(n):
            for i in range(me[v]):
                m[v, i] = np.uint64(0)
            me[v] = 0
            for i in range(ge[v]):
                g[v, i] = np.uint64(0)
            ge[v] = 0
            for i in range(m2e[v]):
                m2[v, i] = np.uint64(0)
            m2e[v] = 0
            for i in range(g2e[v]):
                g2[v, i] = np.uint64(0)
            g2e[v] = 0

        if d > 0:
            for e in range(f_indptr[d], f_indptr[d + 1]):
                a = f_a[e]
                b = f_b[e]
                head = b if pos[a] < pos[b] else a
                tl = a if head == b else b
                if tail[head] != -1:
                    return 1  # two parallel edges entering one vertex
                tail[head] = tl

        te = teff[d]
        for t in range(n):
            v = order[t]
            pv = pos[v]
            a = tail[v]
            for ii in range(indptr[v], indptr[v + 1]):
                q = indices[ii]
                if pos[q] < pv:
                    me[v] = _add_big(m[v], me[v], m[q], me[q])
                    me[v] = _add_one(m[v], me[v])
                    if d == 0:
                        continue
                    # gamma over the full DAG
                    if q == a:
                        ge[v] = _add_big(g[v], ge[v], m[q], me[q])
                        ge[v] = _add_one(g[v], ge[v])
                    else:
                        ge[v] = _add_big(g[v], ge[v], g[q], ge[q])
                    # the doubly-monotone sub-DAG (edges also u0-positive)
                    if u0x * (xs[v] - xs[q]) + u0y * (ys[v] - ys[q]) > 0:
                        m2e[v] = _add_big(m2[v], m2e[v], m2[q], m2e[q])
                        m2e[v] = _add_one(m2[v], m2e[v])
                        if q == a:
                            g2e[v] = _add_big(g2[v], g2e[v], m2[q], m2e[q])
                            g2e[v] = _add_one(g2[v], g2e[v])
                        else:
                            g2e[v] = _add_big(g2[v], g2e[v], g2[q], g2e[q])
            if d == 0:
                te = _add_big(totals[0], te, m[v], me[v])

        if d > 0:
            # totals row d gets gamma; row d of overlap is folded in by the
            # caller, so store gamma and the overlap in alternating halves
            for t in range(n):
                v = order[t]
                te = _add_big(totals[2 * d - 1], te, g[v], ge[v])
            te2 = teff[2 * d]
            for t in range(n):
                v = order[t]
                te2 = _add_big(totals[2 * d], te2, g2[v], g2e[v])
            teff[2 * d] = te2
            teff[2 * d - 1] = te
            for e in range(f_indptr[d], f_indptr[d + 1]):
                a = f_a[e]
                b = f_b[e]
                tail[a] = -1
                tail[b] = -1
        else:
            teff[0] = te
    return 0


def per_direction_counts(g: PlaneGraph, ds: DirectionSet) -> list[int]:
    """New-path totals per sweep direction, as exact Python ints."""
    n = g.n
    ndir = len(ds)
    if ndir == 0:
        return []
    adj = g.adjacency()
    indptr = np.zeros(n + 1, dtype=np.int64)
    for v in range(n):
        indptr[v + 1] = indptr[v] + len(adj[v])
    indices = np.concatenate([np.array(a, dtype=np.int64) for a in adj if len(a)]) if g.m else np.zeros(0, np.int64)

    ux = np.array([u.dx for u in ds.directions], dtype=np.int64)
    uy = np.array([u.dy for u in ds.directions], dtype=np.int64)
    xs = np.array([p.x for p in g.vertices], dtype=np.int64)
    ys = np.array([p.y for p in g.vertices], dtype=np.int64)

    f_indptr = np.zeros(ndir + 1, dtype=np.int64)
    fa: list[int] = []
    fb: list[int] = []
    for d in range(ndir):
        if d > 0:
            for (i, j) in ds.flip_edges(d):
                fa.append(i)
                fb.append(j)
        f_indptr[d + 1] = len(fa)
    f_a = np.array(fa, dtype=np.int64)
    f_b = np.array(fb, dtype=np.int64)

    L = n // 64 + 3
    totals = np.zeros((2 * ndir - 1, L), dtype=np.uint64)
    teff = np.zeros(2 * ndir - 1, dtype=np.int64)
    rc = _count_kernel(
        n, L, indptr, indices, ux, uy, ux[0], uy[0], xs, ys,
        f_indptr, f_a, f_b, True, totals, teff,
    )
    if rc != 0:
        raise InvariantError("two parallel edges enter one vertex")

    def row_int(r: int) -> int:
        return int.from_bytes(totals[r].tobytes(), "little")

    per = [row_int(0)]
    for d in range(1, ndir):
        new = row_int(2 * d - 1) - row_int(2 * d)
        if new < 0:
            raise InvariantError("overlap exceeded the gamma total")
        per.append(new)
    return per

"""Compiled inner loops for the incidence-pattern search.

One row of the scan fixes the first side and sweeps all later sides
(unordered pairs; swapping sides mirrors the group and cannot change the
pattern count).  Per pair: reject on shared inner chords, optionally
reject non-mutually-maximal pairs by two mask subset tests, then run the
O(k^2) chain DP on the merged entry/exit/link masks.  Everything stays in
64-bit integers; pattern counts are at most 2**k.
"""

from __future__ import annotations

import numba
import numpy as np

numba.config.THREADING_LAYER = "workqueue"

from numba import njit, prange


def set_threads(n: int) -> None:
    numba.set_num_threads(max(1, n))


@njit(cache=True)
def enumerate_sides(
    k,
    n_chords,
    conf_lo,
    conf_hi,
    chord_a,
    chord_b,
    inner_bit,
    bound_bit,
    links,
    entries,
    exits,
    inners,
    exti,
    extb,
):
    """Backtracking enumeration of noncrossing chord subsets, packed.

    Emits sides in the same lexicographic order as the object-level
    generator: the current subset first, then extensions by chords of
    increasing index.  ``compat`` tracks every chord (any index) that is
    unused and crossing-free against the current subset; at emission it
    splits into the addable-inner and addable-boundary masks used by the
    mutual-maximal pruning.  Chord conflict masks are two 64-bit words
    since k = 11 already has 65 chord slots.  Returns the side count.
    """
    full_lo = np.uint64(0xFFFFFFFFFFFFFFFF)
    full_hi = np.uint64(0xFFFFFFFFFFFFFFFF)
    # masks of valid chord ids
    if n_chords >= 64:
        valid_lo = full_lo
        valid_hi = (np.uint64(1) << np.uint64(n_chords - 64)) - np.uint64(1)
    else:
        valid_lo = (np.uint64(1) << np.uint64(n_chords)) - np.uint64(1)
        valid_hi = np.uint64(0)

    inner_lo = np.uint64(0)
    inner_hi = np.uint64(0)
    for c in range(n_chords):
        if chord_a[c] >= 1 and chord_b[c] <= k:
            if c < 64:
                inner_lo |= np.uint64(1) << np.uint64(c)
            else:
                inner_hi |= np.uint64(1) << np.uint64(c - 64)

    cur_links = np.zeros(k + 1, np.uint16)
    cur_entry = np.uint16(0)
    cur_exit = np.uint16(0)
    cur_inner = np.uint64(0)

    # explicit DFS stack: chord picked at each depth plus saved compat words
    pick = np.empty(k + 4, np.int64)
    save_lo = np.empty(k + 4, np.uint64)
    save_hi = np.empty(k + 4, np.uint64)
    depth = 0
    compat_lo = valid_lo
    compat_hi = valid_hi
    scan = 0  # next candidate chord index to try at the current node
    idx = 0
    emit = True
    while True:
        if emit:
            for v in range(k + 1):
                links[idx, v] = cur_links[v]
            entries[idx] = cur_entry
            exits[idx] = cur_exit
            inners[idx] = cur_inner
            ei = np.uint64(0)
            eb = np.uint64(0)
            for c in range(n_chords):
                if c < 64:
                    hit = (compat_lo & (np.uint64(1) << np.uint64(c))) != np.uint64(0)
                else:
                    hit = (compat_hi & (np.uint64(1) << np.uint64(c - 64))) != np.uint64(0)
                if hit:
                    if chord_a[c] >= 1 and chord_b[c] <= k:
                        ei |= inner_bit[c]
                    else:
                        eb |= bound_bit[c]
            exti[idx] = ei
            extb[idx] = eb
            idx += 1
            emit = False
        # advance: find the next candidate >= scan in compat
        adv = -1
        for c in range(scan, n_chords):
            if c < 64:
                ok = (compat_lo & (np.uint64(1) << np.uint64(c))) != np.uint64(0)
            else:
                ok = (compat_hi & (np.uint64(1) << np.uint64(c - 64))) != np.uint64(0)
            if ok:
                adv = c
                break
        if adv >= 0:
            pick[depth] = adv
            save_lo[depth] = compat_lo
            save_hi[depth] = compat_hi
            depth += 1
            compat_lo &= ~conf_lo[adv]
            compat_hi &= ~conf_hi[adv]
            if adv < 64:
                compat_lo &= ~(np.uint64(1) << np.uint64(adv))
            else:
                compat_hi &= ~(np.uint64(1) << np.uint64(adv - 64))
            a = chord_a[adv]
            b = chord_b[adv]
            if a == 0:
                cur_entry |= np.uint16(1 << (b - 1))
            elif b == k + 1:
                cur_exit |= np.uint16(1 << (a - 1))
            else:
                cur_links[b] |= np.uint16(1 << (a - 1))
                cur_inner |= inner_bit[adv]
            scan = adv + 1  # the new node extends by strictly later chords
            emit = True
        else:
            if depth == 0:
                break
            depth -= 1
            last = pick[depth]
            compat_lo = save_lo[depth]
            compat_hi = save_hi[depth]
            a = chord_a[last]
            b = chord_b[last]
            if a == 0:
                cur_entry &= np.uint16(~np.uint16(1 << (b - 1)))
            elif b == k + 1:
                cur_exit &= np.uint16(~np.uint16(1 << (a - 1)))
            else:
                cur_links[b] &= np.uint16(~np.uint16(1 << (a - 1)))
                cur_inner &= ~inner_bit[last]
            scan = last + 1  # resume the parent's loop after the popped chord
    return idx


@njit(cache=True, parallel=True)
def pair_scan(k, links, entries, exits, inners, exti, use_prune, row_lo, row_hi, best, cnt):
    S = inners.shape[0]
    kmask_entry = np.int64(1)
    kmask_exit = np.int64(1) << np.int64(k - 1)
    for ri in prange(row_hi - row_lo):
        i = row_lo + ri
        inner_i = inners[i]
        exti_i = exti[i]
        ent_i = np.int64(entries[i])
        exi_i = np.int64(exits[i])
        f = np.zeros(k + 1, np.int64)
        b = np.int64(0)
        c = np.uint64(0)
        for j in range(i, S):
            inner_j = inners[j]
            if inner_i & inner_j:
                continue
            if use_prune:
                if (exti_i & ~inner_j) != np.uint64(0):
                    continue
                if (exti[j] & ~inner_i) != np.uint64(0):
                    continue
            e = ent_i | np.int64(entries[j]) | kmask_entry
            x = exi_i | np.int64(exits[j]) | kmask_exit
            total = np.int64(1)
            for v in range(1, k + 1):
                row = np.int64(links[i, v]) | np.int64(links[j, v])
                if v >= 2:
                    row |= np.int64(1) << np.int64(v - 2)
                acc = (e >> np.int64(v - 1)) & np.int64(1)
                q = 1
                while row != 0:
                    if row & np.int64(1):
                        acc += f[q]
                    row >>= np.int64(1)
                    q += 1
                f[v] = acc
                if (x >> np.int64(v - 1)) & np.int64(1):
                    total += acc
            c += np.uint64(1)
            if total > b:
                b = total
        best[i] = b
        cnt[i] = c


@njit(cache=True)
def pair_collect(k, links, entries, exits, inners, exti, use_prune, i, target, out_j):
    S = inners.shape[0]
    kmask_entry = np.int64(1)
    kmask_exit = np.int64(1) << np.int64(k - 1)
    inner_i = inners[i]
    exti_i = exti[i]
    ent_i = np.int64(entries[i])
    exi_i = np.int64(exits[i])
    f = np.zeros(k + 1, np.int64)
    hits = 0
    for j in range(i, S):
        inner_j = inners[j]
        if inner_i & inner_j:
            continue
        if use_prune:
            if (exti_i & ~inner_j) != np.uint64(0):
                continue
            if (exti[j] & ~inner_i) != np.uint64(0):
                continue
        e = ent_i | np.int64(entries[j]) | kmask_entry
        x = exi_i | np.int64(exits[j]) | kmask_exit
        total = np.int64(1)
        for v in range(1, k + 1):
            row = np.int64(links[i, v]) | np.int64(links[j, v])
            if v >= 2:
                row |= np.int64(1) << np.int64(v - 2)
            acc = (e >> np.int64(v - 1)) & np.int64(1)
            q = 1
            while row != 0:
                if row & np.int64(1):
                    acc += f[q]
                row >>= np.int64(1)
                q += 1
            f[v] = acc
            if (x >> np.int64(v - 1)) & np.int64(1):
                total += acc
        if total == target:
            out_j[hits] = j
            hits += 1
    return hits

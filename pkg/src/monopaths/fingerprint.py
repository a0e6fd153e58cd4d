"""Incidence-pattern search over two-sided chord configurations.

A block of k consecutive spine vertices is modeled on the cycle
v0, v1, ..., v_{k+1}: v0 stands for everything left of the block, v_{k+1}
for everything right.  A *side* is a set of pairwise noncrossing chords
(a, b), b - a >= 2, excluding (0, k+1); chords (0, i) are incoming edges,
(i, k+1) outgoing edges, all others inner edges.  A *group* is a pair of
sides (drawn below/above the spine) sharing no inner chord.

A subset S = {i1 < ... < im} of {1..k} is an incidence pattern of the
group iff a maximal monotone path can meet the block exactly at S, which
reduces to:

    ENTRY(i1): i1 = 1 or an incoming chord (0, i1) exists on either side,
    EXIT(im):  im = k or an outgoing chord (im, k+1) exists,
    LINK(i, j) for consecutive members: j = i + 1 or an inner chord (i, j).

The spine edges grant ENTRY(1), EXIT(k) and adjacent links for free, and
the empty pattern is always present.  Counting is a forward chain DP in
O(k^2): f(j) = [ENTRY(j)] + sum of f(i) over linked i < j, and the total
is 1 + sum of f(j) over j with EXIT(j).  The count of patterns ending at
j is f(j)*[EXIT(j)] and the start-side tallies come from the mirrored
backward DP; the two totals must agree.

``search_pk`` maximizes the pattern count over all side pairs.  Pattern
sets grow monotonically when chords are added, so the search may restrict
itself to *mutually maximal* pairs (no chord can be added to either side)
without changing the maximum; that is the ``mutual-maximal`` pruning.
The pair scan is compiled (see :mod:`monopaths._pairscan`) and runs in
resumable blocks with an atomic checkpoint file.
"""

from __future__ import annotations

import json
import os
import time
from dataclasses import dataclass
from decimal import Decimal, getcontext
from functools import lru_cache

import numpy as np

from .geometry import GraphError, InvariantError

MAX_K = 12

# dissection counts of the (k+2)-gon for k = 0..11; frozen from the
# independent recurrence n*s(n) = 3(2n-3)*s(n-1) - (n-3)*s(n-2)
SIDE_COUNTS = [1, 1, 3, 11, 45, 197, 903, 4279, 20793, 103049, 518859, 2646723]


def chords_of(k: int) -> list[tuple[int, int]]:
    """All admissible chords on the cycle v0..v_{k+1}, lexicographic."""
    return [
        (a, b)
        for a in range(0, k + 1)
        for b in range(a + 2, k + 2)
        if not (a == 0 and b == k + 1)
    ]


def crossing(c: tuple[int, int], d: tuple[int, int]) -> bool:
    a, b = c
    x, y = d
    return (a < x < b < y) or (x < a < y < b)


def is_inner(c: tuple[int, int], k: int) -> bool:
    return c[0] >= 1 and c[1] <= k


@dataclass(frozen=True)
class Side:
    """A noncrossing chord set on one side of the spine."""

    k: int
    chords: tuple[tuple[int, int], ...]

    def __post_init__(self):
        k = self.k
        if not (1 <= k <= MAX_K):
            raise GraphError(f"side width must be 1..{MAX_K}, got {k}")
        object.__setattr__(self, "chords", tuple(sorted(self.chords)))
        seen = set()
        for c in self.chords:
            a, b = c
            if not (0 <= a < b <= k + 1) or b - a < 2 or (a == 0 and b == k + 1):
                raise GraphError(f"invalid chord {c} for k={k}")
            if c in seen:
                raise GraphError(f"duplicate chord {c}")
            seen.add(c)
        for i, c in enumerate(self.chords):
            for d in self.chords[i + 1 :]:
                if crossing(c, d):
                    raise GraphError(f"crossing chords {c} and {d}")
        if len(self.chords) > k - 1:
            raise InvariantError(f"side has {len(self.chords)} > k-1 chords")

    def inner_chords(self) -> tuple[tuple[int, int], ...]:
        return tuple(c for c in self.chords if is_inner(c, self.k))

    def reverse(self) -> "Side":
        k = self.k
        return Side(k, tuple((k + 1 - b, k + 1 - a) for a, b in self.chords))


@lru_cache(maxsize=None)
def generate_sides(k: int) -> tuple[Side, ...]:
    """All sides of width k, by lexicographic backtracking over chords.

    The count equals the number of dissections of a convex (k+2)-gon.
    """
    if not (1 <= k <= MAX_K):
        raise GraphError(f"k must be 1..{MAX_K}, got {k}")
    chords = chords_of(k)
    nc = len(chords)
    compat = [
        [not crossing(chords[i], chords[j]) for j in range(nc)] for i in range(nc)
    ]
    out: list[Side] = []
    picked: list[int] = []

    def rec(start: int) -> None:
        out.append(Side(k, tuple(chords[i] for i in picked)))
        for i in range(start, nc):
            if all(compat[p][i] for p in picked):
                picked.append(i)
                rec(i + 1)
                picked.pop()

    rec(0)
    if len(out) != SIDE_COUNTS[k]:
        raise InvariantError(
            f"side generation for k={k} produced {len(out)}, expected {SIDE_COUNTS[k]}"
        )
    return tuple(out)


@dataclass(frozen=True)
class Group:
    """Two compatible sides over the same block."""

    k: int
    minus: Side
    plus: Side

    def __post_init__(self):
        if self.minus.k != self.k or self.plus.k != self.k:
            raise GraphError("side widths disagree with group width")
        shared = set(self.minus.inner_chords()) & set(self.plus.inner_chords())
        if shared:
            raise GraphError(f"sides share inner chords {sorted(shared)}")
        for v in range(1, self.k + 1):
            if self.in_degree(v) > 2 or self.out_degree(v) > 2:
                raise InvariantError(f"In/Out exceeds 2 at vertex {v}")

    def in_degree(self, v: int) -> int:
        return sum((0, v) in s.chords for s in (self.minus, self.plus))

    def out_degree(self, v: int) -> int:
        return sum((v, self.k + 1) in s.chords for s in (self.minus, self.plus))

    def all_chords(self) -> set[tuple[int, int]]:
        return set(self.minus.chords) | set(self.plus.chords)


def reflect_x(g: Group) -> Group:
    """Mirror across the spine: the two sides swap roles."""
    return Group(g.k, g.plus, g.minus)


def reverse_y(g: Group) -> Group:
    """Mirror left-right: chord (a, b) becomes (k+1-b, k+1-a), same side."""
    return Group(g.k, g.minus.reverse(), g.plus.reverse())


def canonical_group(g: Group) -> Group:
    """Least representative under {id, reflect_x, reverse_y, both}."""
    images = [g, reflect_x(g)]
    images += [reverse_y(h) for h in images]
    return min(images, key=lambda h: (h.minus.chords, h.plus.chords))


def format_group(g: Group) -> str:
    def side(s: Side) -> str:
        return "[" + ",".join(f"({a},{b})" for a, b in s.chords) + "]"

    return f"k={g.k}; minus={side(g.minus)}; plus={side(g.plus)}"


def parse_group(text: str) -> Group:
    parts = dict(
        item.strip().split("=", 1) for item in text.strip().split(";") if item.strip()
    )
    k = int(parts["k"])

    def side(src: str) -> Side:
        src = src.strip()[1:-1]
        chords = []
        for tok in src.replace(" ", "").split("),("):
            tok = tok.strip("()")
            if tok:
                a, b = tok.split(",")
                chords.append((int(a), int(b)))
        return Side(k, tuple(chords))

    return Group(k, side(parts["minus"]), side(parts["plus"]))


# --- pattern machinery ----------------------------------------------------


def _masks(g: Group) -> tuple[int, int, list[int]]:
    """(entry, exit, link rows) with vertex i on bit i-1; spine not included."""
    k = g.k
    entry = 0
    exit_ = 0
    links = [0] * (k + 1)
    for a, b in g.all_chords():
        if a == 0:
            entry |= 1 << (b - 1)
        elif b == k + 1:
            exit_ |= 1 << (a - 1)
        else:
            links[b] |= 1 << (a - 1)
    return entry, exit_, links


def _forward(k: int, entry: int, exit_: int, links: list[int]) -> tuple[list[int], int]:
    entry |= 1
    exit_ |= 1 << (k - 1)
    f = [0] * (k + 1)
    total = 1
    for v in range(1, k + 1):
        row = links[v]
        if v >= 2:
            row |= 1 << (v - 2)
        acc = (entry >> (v - 1)) & 1
        q = 1
        while row:
            if row & 1:
                acc += f[q]
            row >>= 1
            q += 1
        f[v] = acc
        if (exit_ >> (v - 1)) & 1:
            total += acc
    return f, total


@dataclass
class PatternSet:
    """The incidence patterns of one group, with endpoint tallies.

    ``patterns`` lists every member, the empty pattern first and the rest
    sorted by descending membership indicator; ``end_at[i]``/``start_at[i]``
    count the patterns ending and starting at vertex i (1-based; index 0
    unused).
    """

    k: int
    count: int
    end_at: list[int]
    start_at: list[int]
    patterns: tuple[tuple[int, ...], ...]


def pattern_set(g: Group) -> PatternSet:
    k = g.k
    entry, exit_, links = _masks(g)
    f, total = _forward(k, entry, exit_, links)

    rg = reverse_y(g)
    rentry, rexit, rlinks = _masks(rg)
    bf, btotal = _forward(k, rentry, rexit, rlinks)
    if btotal != total:
        raise InvariantError(f"forward {total} != backward {btotal} pattern total")

    exit_all = exit_ | 1 << (k - 1)
    entry_all = entry | 1
    end_at = [0] * (k + 1)
    start_at = [0] * (k + 1)
    for v in range(1, k + 1):
        if (exit_all >> (v - 1)) & 1:
            end_at[v] = f[v]
        # backward tally of vertex v is the forward tally of k+1-v reversed
        if (entry_all >> (v - 1)) & 1:
            start_at[v] = bf[k + 1 - v]

    members: list[tuple[int, ...]] = [()]
    full_entry = entry | 1
    full_exit = exit_ | 1 << (k - 1)
    for code in range(2**k - 1, 0, -1):
        sub = tuple(i for i in range(1, k + 1) if (code >> (k - i)) & 1)
        if not (full_entry >> (sub[0] - 1)) & 1:
            continue
        if not (full_exit >> (sub[-1] - 1)) & 1:
            continue
        ok = True
        for a, b in zip(sub, sub[1:]):
            if b != a + 1 and not (links[b] >> (a - 1)) & 1:
                ok = False
                break
        if ok:
            members.append(sub)
    if len(members) != total:
        raise InvariantError(
            f"pattern DP total {total} != enumerated {len(members)} members"
        )
    if total != 1 + sum(end_at) or total != 1 + sum(start_at):
        raise InvariantError("endpoint tallies break the +1 sum identity")
    return PatternSet(k, total, end_at, start_at, tuple(members))


def pattern_count(g: Group) -> int:
    entry, exit_, links = _masks(g)
    return _forward(g.k, entry, exit_, links)[1]


def format_pattern(sub: tuple[int, ...], k: int) -> str:
    if not sub:
        return "∅"
    if k <= 9:
        return "".join(str(i) for i in sub)
    return " ".join(str(i) for i in sub)


def listing_strings(ps: PatternSet) -> list[str]:
    return [format_pattern(s, ps.k) for s in ps.patterns]


# --- search ----------------------------------------------------------------


@dataclass
class SideTables:
    """Packed per-side arrays consumed by the compiled pair scan."""

    k: int
    links: np.ndarray  # (S, k+1) uint16, inner-link row per end vertex
    entries: np.ndarray  # (S,) uint16
    exits: np.ndarray  # (S,) uint16
    inners: np.ndarray  # (S,) uint64, inner chord slots
    exti: np.ndarray  # (S,) uint64, addable inner chords
    extb: np.ndarray  # (S,) uint64, addable boundary chords

    def side_at(self, idx: int) -> Side:
        """Reconstruct the chord set of one packed row."""
        k = self.k
        chords: list[tuple[int, int]] = []
        e = int(self.entries[idx])
        x = int(self.exits[idx])
        for i in range(1, k + 1):
            if (e >> (i - 1)) & 1:
                chords.append((0, i))
            if (x >> (i - 1)) & 1:
                chords.append((i, k + 1))
        for b in range(2, k + 1):
            row = int(self.links[idx, b])
            for a in range(1, b):
                if (row >> (a - 1)) & 1:
                    chords.append((a, b))
        return Side(k, tuple(chords))


@lru_cache(maxsize=4)
def side_tables(k: int) -> SideTables:
    """Pack all sides of width k for the compiled scan.

    Enumeration itself is compiled (the object-level generator would take
    minutes at k = 11); the backtracking order is identical to
    :func:`generate_sides`, which tests rely on.
    """
    from . import _pairscan

    chords = chords_of(k)
    nc = len(chords)
    inner_ids: dict[tuple[int, int], int] = {}
    bound_ids: dict[tuple[int, int], int] = {}
    for c in chords:
        if is_inner(c, k):
            inner_ids[c] = len(inner_ids)
        else:
            bound_ids[c] = len(bound_ids)
    if len(inner_ids) > 64 or len(bound_ids) > 64:
        raise InvariantError("chord slot masks exceed 64 bits")

    conf_lo = np.zeros(nc, dtype=np.uint64)
    conf_hi = np.zeros(nc, dtype=np.uint64)
    for i in range(nc):
        for j in range(nc):
            if crossing(chords[i], chords[j]):
                if j < 64:
                    conf_lo[i] |= np.uint64(1 << j)
                else:
                    conf_hi[i] |= np.uint64(1 << (j - 64))
    chord_a = np.array([a for a, _ in chords], dtype=np.int64)
    chord_b = np.array([b for _, b in chords], dtype=np.int64)
    inner_bit = np.zeros(nc, dtype=np.uint64)
    bound_bit = np.zeros(nc, dtype=np.uint64)
    for ci, c in enumerate(chords):
        if is_inner(c, k):
            inner_bit[ci] = np.uint64(1 << inner_ids[c])
        else:
            bound_bit[ci] = np.uint64(1 << bound_ids[c])

    S = SIDE_COUNTS[k]
    links = np.zeros((S, k + 1), dtype=np.uint16)
    entries = np.zeros(S, dtype=np.uint16)
    exits = np.zeros(S, dtype=np.uint16)
    inners = np.zeros(S, dtype=np.uint64)
    exti = np.zeros(S, dtype=np.uint64)
    extb = np.zeros(S, dtype=np.uint64)
    produced = _pairscan.enumerate_sides(
        k, nc, conf_lo, conf_hi, chord_a, chord_b, inner_bit, bound_bit,
        links, entries, exits, inners, exti, extb,
    )
    if produced != S:
        raise InvariantError(f"compiled enumeration produced {produced} != {S} sides")
    return SideTables(k, links, entries, exits, inners, exti, extb)


@dataclass
class SearchReport:
    k: int
    p_k: int
    num_sides: int
    num_groups: int
    extremal: list[Group]
    prune: str
    wall_time_s: float
    listings: list[list[str]] | None = None

    def to_json_dict(self) -> dict:
        d = {
            "k": self.k,
            "p_k": self.p_k,
            "num_sides": self.num_sides,
            "num_groups": self.num_groups,
            "extremal": [format_group(g) for g in self.extremal],
            "prune": self.prune,
            "wall_time_s": round(self.wall_time_s, 3),
        }
        if self.listings is not None:
            d["listings"] = self.listings
        return d


def _checkpoint_write(path: str, payload: dict) -> None:
    tmp = path + ".tmp"
    with open(tmp, "w", encoding="utf-8") as fh:
        json.dump(payload, fh)
    os.replace(tmp, path)


def search_pk(
    k: int,
    prune: str = "none",
    threads: int | None = None,
    listings: bool = False,
    checkpoint: str | None = None,
    block_rows: int = 8192,
) -> SearchReport:
    """Exact maximum pattern count over all width-k groups.

    ``prune='mutual-maximal'`` scans only pairs where neither side can
    accept another chord given the other; sound because adding a chord
    never shrinks the pattern set.  A checkpoint file, if given, makes the
    scan resumable in row blocks.
    """
    if not (1 <= k <= 11):
        raise GraphError(f"search supports k = 1..11, got {k}")
    if prune not in ("none", "mutual-maximal"):
        raise GraphError(f"unknown prune mode {prune!r}")
    from . import _pairscan

    if threads:
        _pairscan.set_threads(threads)

    t0 = time.perf_counter()
    tabs = side_tables(k)
    S = len(tabs.inners)
    use_prune = prune == "mutual-maximal"
    if use_prune:
        sel = np.nonzero(tabs.extb == 0)[0].astype(np.int64)
    else:
        sel = np.arange(S, dtype=np.int64)

    links = tabs.links[sel]
    entries = tabs.entries[sel]
    exits = tabs.exits[sel]
    inners = tabs.inners[sel]
    exti = tabs.exti[sel]
    R = len(sel)

    best = np.zeros(R, dtype=np.int64)
    cnt = np.zeros(R, dtype=np.uint64)
    row_done = 0
    if checkpoint and os.path.exists(checkpoint):
        with open(checkpoint, encoding="utf-8") as fh:
            state = json.load(fh)
        if state.get("k") != k or state.get("prune") != prune:
            raise GraphError("checkpoint does not match this search")
        row_done = state["rows_done"]
        best[:row_done] = state["best_rows"]
        cnt[:row_done] = state["cnt_rows"]

    while row_done < R:
        hi = min(R, row_done + block_rows)
        _pairscan.pair_scan(
            k, links, entries, exits, inners, exti, use_prune, row_done, hi, best, cnt
        )
        row_done = hi
        if checkpoint:
            _checkpoint_write(
                checkpoint,
                {
                    "k": k,
                    "prune": prune,
                    "rows_done": row_done,
                    "best_rows": best[:row_done].tolist(),
                    "cnt_rows": cnt[:row_done].tolist(),
                    "max_so_far": int(best[:row_done].max(initial=0)),
                },
            )

    p = int(best.max())
    groups = int(cnt.sum())

    reps: dict[tuple, Group] = {}
    out_j = np.zeros(R, dtype=np.int64)
    for ri in np.nonzero(best == p)[0]:
        hits = _pairscan.pair_collect(
            k, links, entries, exits, inners, exti, use_prune, int(ri), p, out_j
        )
        for t in range(hits):
            g = Group(k, tabs.side_at(sel[ri]), tabs.side_at(sel[out_j[t]]))
            c = canonical_group(g)
            reps[(c.minus.chords, c.plus.chords)] = c
    extremal = [reps[key] for key in sorted(reps)]
    if not extremal:
        raise InvariantError("search found no extremal group")

    report = SearchReport(
        k=k,
        p_k=p,
        num_sides=S,
        num_groups=groups,
        extremal=extremal,
        prune=prune,
        wall_time_s=time.perf_counter() - t0,
        listings=[listing_strings(pattern_set(g)) for g in extremal] if listings else None,
    )
    return report


@dataclass
class CensusReport:
    class_counts: dict[int, int]
    listings: dict[int, list[str]]  # pattern-count -> comma-joined listings
    groups: dict[int, list[Group]]

    def to_json_dict(self) -> dict:
        return {
            "class_counts": {str(c): v for c, v in sorted(self.class_counts.items(), reverse=True)},
            "listings": {str(c): v for c, v in sorted(self.listings.items(), reverse=True)},
            "groups": {
                str(c): [format_group(g) for g in gs]
                for c, gs in sorted(self.groups.items(), reverse=True)
            },
        }


def census_k4() -> CensusReport:
    """Every width-4 group up to side swap, bucketed by pattern count."""
    sides = generate_sides(4)
    counts: dict[int, int] = {}
    listings: dict[int, list[str]] = {}
    groups: dict[int, list[Group]] = {}
    for i in range(len(sides)):
        for j in range(i, len(sides)):
            if set(sides[i].inner_chords()) & set(sides[j].inner_chords()):
                continue
            g = Group(4, sides[i], sides[j])
            ps = pattern_set(g)
            counts[ps.count] = counts.get(ps.count, 0) + 1
            listings.setdefault(ps.count, []).append(",".join(listing_strings(ps)))
            groups.setdefault(ps.count, []).append(canonical_group(g))
    return CensusReport(counts, listings, groups)


# --- bounds ----------------------------------------------------------------


def _int_nth_root(t: int, k: int) -> int:
    if t < 0:
        raise ValueError("negative radicand")
    if t == 0:
        return 0
    hi = 1 << (t.bit_length() // k + 1)
    lo = 0
    while lo < hi:
        mid = (lo + hi + 1) // 2
        if mid**k <= t:
            lo = mid
        else:
            hi = mid - 1
    return lo


def ceil_root(p: int, k: int, places: int = 4) -> Decimal:
    """Smallest x with `places` decimals such that x**k >= p; exact."""
    t = p * 10 ** (places * k)
    r = _int_nth_root(t, k)
    if r**k < t:
        r += 1
    return Decimal(r).scaleb(-places)


@dataclass
class BoundReport:
    k: int
    p_k: int
    base: Decimal
    mu_form: str
    lambda_form: str
    mu_bound: int | None = None

    def to_json_dict(self) -> dict:
        d = {
            "k": self.k,
            "p_k": self.p_k,
            "base": str(self.base),
            "mu_form": self.mu_form,
            "lambda_form": self.lambda_form,
        }
        if self.mu_bound is not None:
            d["mu_bound"] = self.mu_bound
        return d


def bound_report(k: int, p_k: int, n: int | None = None) -> BoundReport:
    """Growth-rate forms implied by a pattern maximum p_k.

    The printed base is rounded *up* at the displayed precision so the
    stated bound remains valid.  With n given, the concrete maximal-path
    bound p^(floor(n/k)) * 2^(n mod k) is evaluated exactly.
    """
    if p_k < 2:
        raise GraphError("p_k must be at least 2")
    base = ceil_root(p_k, k)
    mu_form = f"O({p_k}^(n/{k}))"
    lambda_form = f"O(n^3 {p_k}^(n/{k})) = O({base}^n)"
    mu_bound = None
    if n is not None:
        q, r = divmod(n, k)
        mu_bound = p_k**q * 2**r
    return BoundReport(k, p_k, base, mu_form, lambda_form, mu_bound)


def tribonacci_bound(i: int) -> int:
    """T(1) = T(2) = 1, T(3) = 2, then each term sums the previous three."""
    if i < 1:
        raise GraphError("index must be >= 1")
    a, b, c = 1, 1, 2
    if i == 1 or i == 2:
        return 1
    if i == 3:
        return 2
    for _ in range(i - 3):
        a, b, c = b, c, a + b + c
    return c


def tribonacci_alpha(places: int = 4) -> Decimal:
    """Real root of x^3 - x^2 - x - 1, by Newton iteration in Decimal."""
    getcontext().prec = places + 15
    x = Decimal(2)
    for _ in range(60):
        fx = x**3 - x**2 - x - 1
        dfx = 3 * x**2 - 2 * x - 1
        nxt = x - fx / dfx
        if abs(nxt - x) <= Decimal(1).scaleb(-(places + 8)):
            x = nxt
            break
        x = nxt
    return x.quantize(Decimal(1).scaleb(-places))

"""Shared random-case generators for the property suites."""

from __future__ import annotations

import random

from monopaths.fingerprint import Group, Side, chords_of, crossing, is_inner


def random_side(k: int, rng: random.Random, avoid_inner: set | None = None) -> Side:
    """A random noncrossing chord set, greedily grown in shuffled order."""
    chords = chords_of(k)
    rng.shuffle(chords)
    picked: list[tuple[int, int]] = []
    for c in chords:
        if avoid_inner and is_inner(c, k) and c in avoid_inner:
            continue
        if rng.random() < 0.45 and all(not crossing(c, d) for d in picked):
            picked.append(c)
    return Side(k, tuple(picked))


def random_group(rng: random.Random, kmin: int = 2, kmax: int = 8) -> Group:
    k = rng.randint(kmin, kmax)
    minus = random_side(k, rng)
    plus = random_side(k, rng, avoid_inner=set(minus.inner_chords()))
    return Group(k, minus, plus)


def addable_chords(g: Group, side: str) -> list[tuple[int, int]]:
    """Chords that can legally join the given side of the group."""
    s = g.minus if side == "minus" else g.plus
    other = g.plus if side == "minus" else g.minus
    out = []
    for c in chords_of(g.k):
        if c in s.chords:
            continue
        if is_inner(c, g.k) and c in other.inner_chords():
            continue
        if all(not crossing(c, d) for d in s.chords):
            out.append(c)
    return out


def add_chord(g: Group, side: str, c: tuple[int, int]) -> Group:
    if side == "minus":
        return Group(g.k, Side(g.k, g.minus.chords + (c,)), g.plus)
    return Group(g.k, g.minus, Side(g.k, g.plus.chords + (c,)))


def split_group(g: Group, i: int) -> tuple[Group, Group]:
    """Restrict a width-k group to its first i and last k-i vertices.

    Chords crossing the cut become outgoing (left block) and incoming
    (right block) markers; chords reduced to spine width or to the closing
    edge vanish (their roles are granted implicitly).  Every pattern of g
    restricts to a pattern of each block, which is what makes pattern
    counts submultiplicative.
    """
    k = g.k
    j = k - i

    def map_left(s: Side) -> Side:
        out = set()
        for a, b in s.chords:
            if a > i:
                continue
            b2 = min(b, i + 1)
            if b2 - a >= 2 and not (a == 0 and b2 == i + 1):
                out.add((a, b2))
        return Side(i, tuple(out))

    def map_right(s: Side) -> Side:
        out = set()
        for a, b in s.chords:
            if b <= i:
                continue
            a2 = max(a - i, 0)
            b2 = b - i if b <= k else j + 1
            if b2 - a2 >= 2 and not (a2 == 0 and b2 == j + 1):
                out.add((a2, b2))
        return Side(j, tuple(out))

    left = Group(i, map_left(g.minus), map_left(g.plus))
    right = Group(j, map_right(g.minus), map_right(g.plus))
    return left, right

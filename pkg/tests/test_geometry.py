import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from monopaths.geometry import (
    COLLINEAR,
    LEFT,
    RIGHT,
    GraphError,
    PlaneGraph,
    Point,
    Vector,
    orientation,
    parallel_classes,
    random_scan_triangulation,
    scan_triangulation,
    validate_plane,
)

coord = st.integers(min_value=-200, max_value=200)


def test_orientation_axes():
    assert orientation(Point(0, 0), Point(1, 0), Point(0, 1)) == LEFT
    assert orientation(Point(0, 0), Point(1, 1), Point(2, 2)) == COLLINEAR
    assert orientation(Point(0, 0), Point(0, 1), Point(1, 0)) == RIGHT


@given(coord, coord, coord, coord, coord, coord)
@settings(max_examples=300)
def test_orientation_antisymmetry(ax, ay, bx, by, cx, cy):
    p, q, r = Point(ax, ay), Point(bx, by), Point(cx, cy)
    assert orientation(p, q, r) == -orientation(p, r, q) == -orientation(q, p, r)


@given(coord, coord)
@settings(max_examples=300)
def test_axis_canonical_idempotent(dx, dy):
    if dx == 0 and dy == 0:
        return
    v = Vector(dx, dy).axis_canonical()
    assert v.axis_canonical() == v
    assert (-Vector(dx, dy)).axis_canonical() == v


def test_coordinate_bound_enforced():
    with pytest.raises(GraphError):
        Point(10**7 + 1, 0)


SQUARE = [Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)]


def test_validate_square_with_diagonal_ok():
    g = PlaneGraph(SQUARE, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    assert validate_plane(g) == []


def test_validate_crossing_diagonals():
    g = PlaneGraph(SQUARE, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2), (1, 3)])
    assert validate_plane(g) == [((0, 2), (1, 3))]


def test_validate_empty_edges():
    assert validate_plane(PlaneGraph(SQUARE, [])) == []


def test_validate_overlapping_collinear():
    g = PlaneGraph([Point(0, 0), Point(2, 0), Point(1, 0)], [(0, 1), (0, 2)])
    assert validate_plane(g) == [((0, 1), (0, 2))]


def test_parallel_classes_square():
    g = PlaneGraph(SQUARE, [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)])
    classes = parallel_classes(g)
    assert len(classes) == 3
    sizes = sorted(len(es) for _, es in classes)
    assert sizes == [1, 2, 2]
    total = sum(len(es) for _, es in classes)
    assert total == g.m


def test_parallel_classes_single_edge():
    g = PlaneGraph([Point(0, 0), Point(3, 1)], [(0, 1)])
    assert len(parallel_classes(g)) == 1


def test_parallel_classes_collinear_path():
    g = PlaneGraph([Point(0, 0), Point(1, 0), Point(2, 0)], [(0, 1), (1, 2)])
    classes = parallel_classes(g)
    assert len(classes) == 1
    assert len(classes[0][1]) == 2


def test_scan_triangle():
    g = scan_triangulation([Point(0, 0), Point(2, 1), Point(4, -1)])
    assert g.m == 3


def test_scan_four_convex():
    g = scan_triangulation([Point(0, 0), Point(2, 5), Point(5, 4), Point(7, -1)])
    assert g.m == 5  # 3n-3-h with h = 4


def test_scan_rejects_duplicate_x():
    with pytest.raises(GraphError, match="duplicate x"):
        scan_triangulation([Point(0, 0), Point(0, 2), Point(1, 1)])


def test_scan_rejects_collinear():
    with pytest.raises(GraphError, match="collinear"):
        scan_triangulation([Point(0, 0), Point(1, 1), Point(2, 2), Point(3, 0)])


@pytest.mark.parametrize("seed", range(25))
def test_scan_triangulation_properties(seed):
    rng = random.Random(seed)
    n = rng.randint(4, 24)
    g = random_scan_triangulation(n, seed)
    assert validate_plane(g) == []
    assert g.m <= 3 * g.n - 6
    # every x-consecutive pair is adjacent
    idx = sorted(range(g.n), key=lambda i: g.vertices[i].x)
    adj = g.adjacency()
    for a, b in zip(idx, idx[1:]):
        assert b in adj[a]


def test_parallel_classes_partition_random():
    for seed in range(10):
        g = random_scan_triangulation(10, 100 + seed)
        classes = parallel_classes(g)
        seen = [e for _, es in classes for e in es]
        assert sorted(seen) == list(g.edges)

from monopaths.counting import count_monotone_all
from monopaths.directions import (
    DirectionSet,
    argument_less,
    arrangement_orders,
    build_direction_set,
    sorted_order,
)
from monopaths.geometry import (
    PlaneGraph,
    Point,
    Vector,
    parallel_classes,
    random_scan_triangulation,
)
from monopaths.oracle import brute_force_paths

SQUARE_DIAG = PlaneGraph(
    [Point(0, 0), Point(1, 0), Point(1, 1), Point(0, 1)],
    [(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)],
)


def test_single_edge_directions():
    g = PlaneGraph([Point(0, 0), Point(5, 3)], [(0, 1)])
    ds = build_direction_set(g)
    dirs = {(u.dx, u.dy) for u in ds.directions}
    assert dirs == {(5, 3), (-5, -3)}


def test_square_direction_count():
    ds = build_direction_set(SQUARE_DIAG)
    assert len(ds) == 6 <= 6 * 4 - 12
    assert len(ds) == 2 * len(parallel_classes(SQUARE_DIAG))


def test_edgeless_marker():
    g = PlaneGraph([Point(0, 0), Point(1, 5)], [])
    ds = build_direction_set(g)
    assert len(ds) == 0 and ds.u0 is None
    rep = count_monotone_all(g, ds=ds)
    assert rep.directed_total == 0 and rep.per_direction == []


def test_u0_minimum_argument():
    ds = build_direction_set(SQUARE_DIAG)
    for u in ds.directions[1:]:
        assert argument_less(ds.directions[0], u)


def test_sorted_order_x():
    g = PlaneGraph([Point(0, 0), Point(2, 5), Point(1, 1)], [(0, 1)])
    assert sorted_order(g, Vector(1, 0)) == [0, 2, 1]
    assert sorted_order(g, Vector(-1, 0)) == [1, 2, 0]


def test_no_adjacent_ties():
    for seed in range(15):
        g = random_scan_triangulation(9, 550 + seed)
        ds = build_direction_set(g)
        vs = g.vertices
        for u in ds.directions:
            for i, j in g.edges:
                pi = u.dx * vs[i].x + u.dy * vs[i].y
                pj = u.dx * vs[j].x + u.dy * vs[j].y
                assert pi != pj


def test_arrangement_orders_agree():
    for seed in range(50):
        n = 4 + seed % 27
        g = random_scan_triangulation(n, 7100 + seed)
        ds = build_direction_set(g)
        orders = arrangement_orders(g, ds)
        assert len(orders) == len(ds)
        for u, order in zip(ds.directions, orders):
            assert order == sorted_order(g, u)


def test_triangle_orders():
    g = random_scan_triangulation(3, 2)
    ds = build_direction_set(g)
    orders = arrangement_orders(g, ds)
    assert len(orders) == len(ds)
    for order in orders:
        assert sorted(order) == [0, 1, 2]


def test_sufficiency_for_oracle_paths():
    """Every monotone path is covered by at least one sweep direction."""
    for seed in range(12):
        g = random_scan_triangulation(7, 9000 + seed)
        ds = build_direction_set(g)
        vs = g.vertices
        _, paths = brute_force_paths(g, "strict", "directed", collect=True)
        for p in paths:
            assert any(
                all(
                    u.dx * (vs[b].x - vs[a].x) + u.dy * (vs[b].y - vs[a].y) > 0
                    for a, b in zip(p, p[1:])
                )
                for u in ds.directions
            )


def test_exactly_one_flip():
    for seed in range(10):
        g = random_scan_triangulation(8, 300 + seed)
        ds = build_direction_set(g)
        for i in range(1, len(ds)):
            u = ds.directions[i]
            prev = ds.directions[i - 1]
            flipped = []
            for ci, (d, _) in enumerate(ds.classes):
                # class flips at u iff the sign of <d, .> differs at prev vs u
                su = d.dot(u)
                sp = d.dot(prev)
                assert su != 0 and sp != 0
                if (su > 0) != (sp > 0):
                    flipped.append(ci)
            assert flipped == [ds.flip_class[i]]


def test_deterministic():
    a = build_direction_set(SQUARE_DIAG)
    b = build_direction_set(SQUARE_DIAG)
    assert [(u.dx, u.dy) for u in a.directions] == [(u.dx, u.dy) for u in b.directions]
    assert a.flip_class == b.flip_class

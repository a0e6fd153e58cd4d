import pytest

from monopaths.counting import (
    OrderedMonotoneGraph,
    count_maximal_x_monotone,
    count_monotone_all,
    count_x_monotone,
    enumerate_monotone_all,
    enumerate_x_monotone,
)
from monopaths.fingerprint import tribonacci_bound
from monopaths.geometry import PlaneGraph, Point, random_scan_triangulation
from monopaths.instances import lower_bound_graph, square_with_diagonal
from monopaths.oracle import brute_force_paths, count_dag_paths


def path_graph(n):
    return OrderedMonotoneGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def test_path3_counts():
    t = count_x_monotone(path_graph(3))
    assert t.per_vertex == [0, 1, 2]
    assert t.total == 3


@pytest.mark.parametrize("n", [2, 5, 9, 40])
def test_hamiltonian_path_total(n):
    assert count_x_monotone(path_graph(n)).total == n * (n - 1) // 2


def test_maximal_spine_only():
    assert count_maximal_x_monotone(path_graph(6)).total == 1


def test_maximal_two_disjoint_edges():
    omg = OrderedMonotoneGraph.from_edges(4, [(0, 1), (2, 3)])
    assert count_maximal_x_monotone(omg).total == 2


def test_maximal_counts_isolated_vertices():
    omg = OrderedMonotoneGraph.from_edges(3, [(0, 2)])
    assert count_maximal_x_monotone(omg).total == 2  # the edge and the lone vertex


def test_maximal_under_tribonacci_bound():
    for seed in range(20):
        n = 5 + seed % 8
        g = random_scan_triangulation(n, 4400 + seed)
        order = sorted(range(n), key=lambda i: g.vertices[i].x)
        omg = OrderedMonotoneGraph.from_edges(n, g.edges, order)
        assert count_maximal_x_monotone(omg).total <= tribonacci_bound(n)


def test_enumerate_path3():
    omg = path_graph(3)
    assert set(enumerate_x_monotone(omg)) == {(0, 1), (1, 2), (0, 1, 2)}


def test_enumeration_matches_count_and_oracle():
    for seed in range(12):
        n = 5 + seed % 6
        g = random_scan_triangulation(n, 8800 + seed)
        order = sorted(range(n), key=lambda i: g.vertices[i].x)
        omg = OrderedMonotoneGraph.from_edges(n, g.edges, order)
        paths = list(enumerate_x_monotone(omg))
        assert len(paths) == len(set(paths)) == count_x_monotone(omg).total
        assert count_dag_paths(omg) == len(paths)
        # length accounting: emitted vertices = sum of path lengths
        assert sum(len(p) for p in paths) == sum(len(p) for p in set(paths))


def test_emission_prefix_under_abort():
    omg = path_graph(5)
    full = list(enumerate_x_monotone(omg))
    it = enumerate_x_monotone(omg)
    partial = [next(it) for _ in range(4)]
    it.close()
    assert partial == full[:4]


def test_square_all_directions_vs_oracle():
    g = square_with_diagonal()
    rep = count_monotone_all(g)
    cnt, paths = brute_force_paths(g, "strict", "directed", collect=True)
    assert rep.directed_total == cnt == 30
    assert rep.undirected_total == 15
    assert set(enumerate_monotone_all(g)) == set(paths)


def test_single_edge_all_directions():
    g = PlaneGraph([Point(0, 0), Point(2, 1)], [(0, 1)])
    rep = count_monotone_all(g)
    assert rep.directed_total == 2 and rep.undirected_total == 1


def test_collinear_path_graph():
    g = PlaneGraph([Point(0, 0), Point(1, 0), Point(2, 0)], [(0, 1), (1, 2)])
    rep = count_monotone_all(g)
    cnt, _ = brute_force_paths(g, "strict", "directed")
    assert rep.directed_total == cnt


def test_random_instances_vs_oracle():
    for seed in range(30):
        n = 5 + seed % 8
        g = random_scan_triangulation(n, 31000 + seed)
        rep = count_monotone_all(g)
        cnt, paths = brute_force_paths(g, "strict", "directed", collect=True)
        assert rep.directed_total == cnt
        emitted = list(enumerate_monotone_all(g))
        assert len(emitted) == len(set(emitted)) == cnt
        assert set(emitted) == set(paths)


def test_dedupe_halves_exactly():
    g = square_with_diagonal()
    full = list(enumerate_monotone_all(g))
    half = list(enumerate_monotone_all(g, dedupe=True))
    assert len(full) == 2 * len(half)
    assert {min(p, p[::-1]) for p in full} == set(half)


def test_no_path_emitted_twice_across_directions():
    for seed in range(8):
        g = random_scan_triangulation(7, 6200 + seed)
        emitted = list(enumerate_monotone_all(g))
        assert len(emitted) == len(set(emitted))


def test_fast_engine_equals_reference():
    for seed in range(10):
        n = 6 + 3 * (seed % 5)
        g = random_scan_triangulation(n, 777 + seed)
        a = count_monotone_all(g, arrangement=False)
        b = count_monotone_all(g, arrangement=True)
        assert a.directed_total == b.directed_total
        assert [c for _, c in a.per_direction] == [c for _, c in b.per_direction]


def test_per_direction_new_counts_nonnegative_and_sum():
    g = square_with_diagonal()
    rep = count_monotone_all(g)
    assert all(c >= 0 for _, c in rep.per_direction)
    assert sum(c for _, c in rep.per_direction) == rep.directed_total


def test_triangulation_quadratic_floor_small():
    for seed in range(10):
        n = 5 + seed
        g = random_scan_triangulation(n, 51 + seed)
        rep = count_monotone_all(g)
        assert rep.undirected_total >= n * (n - 1) // 2


def test_tallies_additive_over_components():
    omg = OrderedMonotoneGraph.from_edges(6, [(0, 1), (1, 2), (3, 4), (4, 5)])
    assert count_x_monotone(omg).total == 2 * count_x_monotone(path_graph(3)).total


def test_lower_bound_level2_matches_dag_oracle():
    lbg = lower_bound_graph(2)
    assert count_x_monotone(lbg.omg).total == count_dag_paths(lbg.omg)

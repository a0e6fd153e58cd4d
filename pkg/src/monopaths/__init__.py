"""Monotone paths in plane geometric graphs.

Exact counting and enumeration of monotone paths by a direction sweep,
brute-force oracles for verification, the incidence-pattern search that
bounds the maximum number of such paths, and the named extremal
constructions.
"""

__version__ = "0.1.0"

from .counting import (
    MonotoneCountReport,
    OrderedMonotoneGraph,
    PathTally,
    count_maximal_x_monotone,
    count_monotone_all,
    count_x_monotone,
    enumerate_monotone_all,
    enumerate_x_monotone,
)
from .directions import DirectionSet, arrangement_orders, build_direction_set, sorted_order
from .fingerprint import (
    Group,
    PatternSet,
    SearchReport,
    Side,
    bound_report,
    census_k4,
    generate_sides,
    pattern_set,
    reflect_x,
    reverse_y,
    search_pk,
    tribonacci_alpha,
    tribonacci_bound,
)
from .geometry import (
    GraphError,
    InvariantError,
    PlaneGraph,
    Point,
    Vector,
    orientation,
    parallel_classes,
    random_scan_triangulation,
    scan_triangulation,
    validate_plane,
)
from .instances import growth_probe, lower_bound_graph, square_with_diagonal
from .oracle import (
    CapExceeded,
    brute_force_paths,
    count_dag_paths,
    is_monotone,
    is_weakly_monotone,
)

__all__ = [name for name in dir() if not name.startswith("_")]

#!/usr/bin/env python3
"""Weak monotonicity is strictly more permissive than strict monotonicity.

On the unit square with one diagonal, the four boundary 4-vertex paths
admit a direction with nonnegative inner products (the boundary edge
orthogonal to it contributes zero) but no strictly positive one.  The gap
19 weak vs 15 strict undirected paths is the smallest separation between
the two counts.
"""

from monopaths import brute_force_paths, is_monotone, is_weakly_monotone, square_with_diagonal

g = square_with_diagonal()
strict_count, strict_paths = brute_force_paths(g, "strict", "undirected", collect=True)
weak_count, weak_paths = brute_force_paths(g, "weak", "undirected", collect=True)

print(f"strict undirected paths: {strict_count}")
print(f"weak undirected paths:   {weak_count}")

strict_set = {min(p, p[::-1]) for p in strict_paths}
print("\nweakly-but-not-strictly monotone paths:")
for p in sorted(weak_paths):
    if min(p, p[::-1]) not in strict_set:
        labels = "-".join(str(v + 1) for v in p)
        print(f"  {labels}   strict={is_monotone(g, p)}  weak={is_weakly_monotone(g, p)}")

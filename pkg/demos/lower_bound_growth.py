#!/usr/bin/env python3
"""Growth of the doubling construction.

The layered graph on n = 2**level + 2 vertices carries exponentially many
x-monotone paths.  The n-th roots of the directed totals fall toward the
asymptotic base while the maximal-path roots climb toward it: the two
columns bracket the growth constant near 1.70.
"""

from monopaths import growth_probe, lower_bound_graph

lbg = lower_bound_graph(3)
print(f"level 3 instance: n={lbg.n}")
print(f"  above-spine jumps: {lbg.above}")
print(f"  below-spine jumps: {lbg.below}")

print(f"\n{'level':>5} {'n':>6} {'directed root':>14} {'maximal root':>13}")
for level, (n, total, root, mtotal, mroot) in zip(range(2, 13), growth_probe(range(2, 13))):
    print(f"{level:>5} {n:>6} {str(root):>14} {str(mroot):>13}")

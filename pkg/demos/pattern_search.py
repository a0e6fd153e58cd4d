#!/usr/bin/env python3
"""Maximum incidence-pattern counts and the growth bounds they imply.

Runs the exact search for widths 1..8 (a second or two with the
mutual-maximal pruning), prints the growth-rate bound for each width, and
shows the width-4 census with the unique 13-pattern configuration.
"""

from monopaths import bound_report, census_k4, pattern_set, search_pk
from monopaths.fingerprint import format_group, listing_strings

print(f"{'k':>2} {'p_k':>4} {'base':>7}  extremal classes")
for k in range(1, 9):
    rep = search_pk(k, prune="mutual-maximal")
    base = bound_report(k, rep.p_k).base
    print(f"{k:>2} {rep.p_k:>4} {base:>7}  {len(rep.extremal)}")

print("\nwidth-4 census by pattern count:")
census = census_k4()
for count in sorted(census.class_counts, reverse=True):
    print(f"  {census.class_counts[count]:3d} classes with {count} patterns")

best = search_pk(4).extremal[0]
print(f"\nthe unique 13-pattern width-4 configuration: {format_group(best)}")
print("patterns: " + ",".join(listing_strings(pattern_set(best))))

print("\nbounds at selected widths:")
for k, p in ((8, 120), (11, 591)):
    print(f"  {bound_report(k, p).lambda_form}")

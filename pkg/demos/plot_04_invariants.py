"""
Counting with exponents
=======================

The later-neighbour counts along a PEO give the chromatic polynomial, the
Poincare polynomial and the number of regions.  Each is checked against a
brute-force count.
"""

from chordal_braids.graph import from_edges
from chordal_braids.invariants import (
    brute_force_acyclic_orientations,
    brute_force_coloring_count,
    chromatic_polynomial,
    exponents,
    poincare_polynomial,
    region_count,
)

g = from_edges("abcde", [("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d"), ("d", "e")])

ex = exponents(g)
print("PEO:", ex.peo, "exponents:", ex.exps)

chi = chromatic_polynomial(g)
print("chromatic polynomial:", chi)
for q in range(5):
    print(f"  q={q}: formula {chi(q)}, brute force {brute_force_coloring_count(g, q)}")

print("Poincare polynomial:", poincare_polynomial(g))
print("regions:", region_count(g), "acyclic orientations:", brute_force_acyclic_orientations(g))

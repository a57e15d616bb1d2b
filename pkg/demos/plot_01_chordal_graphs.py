"""
Chordal graphs and elimination orderings
========================================

Recognize a chordal graph, read off a perfect elimination ordering and its
maximal simplices, and see what a non-chordal graph looks like.
"""

from chordal_braids.graph import (
    chordless_cycle,
    find_peo,
    from_edges,
    is_chordal,
    peo_with_suffix,
    s_zero,
)

# two triangles glued along the edge b-c, with a pendant vertex e on d
g = from_edges("abcde", [("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d"), ("d", "e")])
print("chordal:", is_chordal(g))

# LexBFS, reversed, is a perfect elimination ordering
peo = find_peo(g)
print("PEO:", peo)

# maximal simplices come straight from the PEO
print("maximal simplices:", g.maximal_simplices)

# any simplex can be pushed to the end of a PEO
print("PEO ending in {b, c}:", peo_with_suffix(g, {"b", "c"}))

# the simplex of a simplicial vertex, and the part of it that sees nothing outside
print("s_zero(a):", s_zero(g, "a"))

# the 4-cycle is the smallest obstruction
c4 = from_edges("wxyz", [("w", "x"), ("x", "y"), ("y", "z"), ("z", "w")])
print("C4 chordal:", is_chordal(c4), "- witness:", chordless_cycle(c4))

# the clique intersection diagram, ready for graphviz
print(g.clique_diagram_dot())

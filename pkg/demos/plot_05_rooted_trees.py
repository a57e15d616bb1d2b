"""
Rooted trees
============

Joining each vertex of a rooted tree to its ancestors gives a chordal graph.
Its maximal simplices are the root-to-leaf chains and the normal form has one
free factor per vertex, of rank equal to the height.
"""

from chordal_braids import gamma as gm
from chordal_braids.trees import (
    comparability_graph,
    height,
    leaves_first_peo,
    maximal_simplices_via_leaves,
    parse_newick,
    projection_kills_layers,
    semidirect_profile,
)

t = parse_newick("((c,d)a,b)r;")
g = comparability_graph(t)
print("edges:", g.edges)
print("chains:", maximal_simplices_via_leaves(t))
print("heights:", {v: height(t, v) for v in t.vertices})
print("profile (height, count):", semidirect_profile(t))

x = gm.from_edge_word(g, "E[r,c] E[a,d] E[r,b]^-1 E[a,c]")
nf = gm.normal_form(x, leaves_first_peo(t))
print("normal form:", nf)
print("ranks:", nf.ranks())

# projecting to a chain only sees the layers on that chain
print("projection to chain r-a-c:", gm.project(x, t.chain("c")))
print("off-chain layers drop out:", all(projection_kills_layers(t, x, w) for w in t.vertices))

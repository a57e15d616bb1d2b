"""
Tuples of braids over a chordal graph
=====================================

An element of the group of a chordal graph is a tuple of pure braids, one per
maximal simplex, that agree where the simplices overlap.  Every element has a
normal form along a perfect elimination ordering.
"""

from chordal_braids import gamma as gm
from chordal_braids import purebraid as pb
from chordal_braids.graph import from_edges

g = from_edges("abcd", [("a", "b"), ("a", "c"), ("b", "c"), ("b", "d"), ("c", "d")])

# words in edge generators become tuples of braid words
x = gm.from_edge_word(g, "E[a,b] E[b,c] E[c,d]^-1 E[a,c]")
print("components:", x)

# the normal form: a free word per vertex, in the edges to later vertices
nf = gm.normal_form(x)
print("normal form:", nf)
print("layer ranks:", nf.ranks())
print("round trip:", gm.equal(gm.from_normal_form(nf), x))

# deleting a simplicial vertex and lifting back splits off a free kernel part
delta = gm.delete_simplicial_vertex(x, "a")
sec = gm.section(delta, g, "a")
kernel = gm.kernel_word(x * sec.inverse(), "a")
print("kernel part at a:", kernel)

# the square over G - S0 commutes for genuine elements ...
print("pull-back square at a:", gm.verify_pullback_square(g, "a", x))

# ... and a tampered tuple is caught
S = g.maximal_simplices[0]
comps = dict(x.components)
comps[S] = comps[S] * pb.generator(S, "b", "c")
print("tampered tuple passes:", gm.verify_pullback_square(g, "a", gm.LimitElement(g, comps)))

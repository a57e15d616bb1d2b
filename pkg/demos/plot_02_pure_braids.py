"""
Pure braid words and the Artin action
=====================================

Pure braid words are compared through their action on a free group.  Combing
writes any word as a product of words in free groups, one per strand.
"""

from chordal_braids import purebraid as pb

I = (1, 2, 3)
a12 = pb.BraidWord.parse(I, "A[1,2]")

# the action of A[1,2] on the free group on x1, x2, x3
print(pb.artin_auto(a12))

# A[1,3] and A[2,3] do not commute ...
u = pb.BraidWord.parse(I, "A[1,3] A[2,3]")
v = pb.BraidWord.parse(I, "A[2,3] A[1,3]")
print("A13 A23 == A23 A13:", pb.equal(u, v))

# ... but the full twist is central
twist = pb.BraidWord.parse(I, "A[1,2] A[1,3] A[2,3]")
print("twist is central:", all(
    pb.equal(twist * g, g * twist)
    for g in (pb.generator(I, 1, 2), pb.generator(I, 1, 3), pb.generator(I, 2, 3))
))

# forgetting a strand deletes the generators that touch it
w = pb.BraidWord.parse(I, "A[1,3] A[1,2] A[2,3]^-1")
print("forget strand 3:", pb.forget(w, {1, 2}))

# combing: one free layer per strand, multiplied in order
c = pb.comb(w)
print("combed:", c)
print("reassembles to w:", pb.equal(pb.uncomb(c), w))

# a conjugate of a kernel generator, rewritten in the free kernel basis
k = pb.kernel_coordinates(pb.BraidWord.parse(I, "A[1,2]^-1 A[1,3] A[1,2]"))
print("kernel coordinates:", k)

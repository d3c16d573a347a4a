"""
Matrices as order-2 tensors: spectra, symmetry, bipartiteness
=============================================================

Square matrices are the r = 2 case of cubical tensors.  This walk-through
computes exact characteristic polynomials, asks when the eigenvalue multiset
is symmetric about zero, and shows that bipartiteness is sufficient but not
necessary for that symmetry.
"""

# The package stores matrices sparsely as {(i, j): value} with 1-based
# indices, exact rational arithmetic underneath.
from hypersym import (
    CubicalTensor,
    UniPoly,
    charpoly_2matrix,
    fixture,
    is_bipartite_2matrix,
    is_spectrum_symmetric_poly,
)

# Three small reference matrices ship as named fixtures:
#   h2     -- [[1, 1], [1, -1]]
#   a1     -- a 4x4 0/1 matrix containing a directed triangle
#   a2     -- the adjacency matrix of a perfect matching 1-2, 3-4
h2 = fixture("h2")
a1 = fixture("a1")
a2 = fixture("a2")

# Exact characteristic polynomials (ascending coefficients, monic).
p_h2 = charpoly_2matrix(h2)
p_a1 = charpoly_2matrix(a1)
p_a2 = charpoly_2matrix(a2)
print("charpoly(h2) =", p_h2)  # x^2 - 2
print("charpoly(a1) =", p_a1)  # (x - 1)^2 (x + 1)^2
print("charpoly(a2) =", p_a2)

assert p_h2 == UniPoly([-2, 0, 1])
assert p_a1 == UniPoly([-1, 1]) ** 2 * UniPoly([1, 1]) ** 2
assert p_a2 == p_a1

# A polynomial has a symmetric spectrum when its roots come in (z, -z)
# pairs; for a monic polynomial that is a statement about which
# coefficients vanish.
for name, p in [("h2", p_h2), ("a1", p_a1), ("a2", p_a2)]:
    print(f"spectrum of {name} symmetric about 0:", is_spectrum_symmetric_poly(p))
assert all(map(is_spectrum_symmetric_poly, (p_h2, p_a1, p_a2)))

# Bipartiteness of the underlying undirected support graph.  Only the
# matching a2 is bipartite; a1 contains a triangle and h2 has diagonal
# entries (self-loops).
print("bipartition of a2:", is_bipartite_2matrix(a2))
print("bipartition of a1:", is_bipartite_2matrix(a1))
print("bipartition of h2:", is_bipartite_2matrix(h2))
assert is_bipartite_2matrix(a2) == ((1, 3), (2, 4))
assert is_bipartite_2matrix(a1) is None
assert is_bipartite_2matrix(h2) is None

# Moral: a bipartite nonnegative matrix always has a symmetric spectrum,
# but h2 and a1 show the converse fails -- their spectra are symmetric
# with no bipartition in sight.  For general matrices the right
# explanation is the sign/scaling structure, not the topology alone.

# One more exact computation: a direct-sum matrix factors its
# characteristic polynomial over the diagonal blocks.
blocks = CubicalTensor(
    2, 4, [((1, 2), 1), ((2, 1), 1), ((3, 4), 2), ((4, 3), 2)]
)
p_blocks = charpoly_2matrix(blocks)
print("charpoly of the 2-block matrix:", p_blocks)
assert p_blocks == UniPoly([-1, 0, 1]) * UniPoly([-4, 0, 1])

print("done.")

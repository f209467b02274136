"""Superspaces, the rule of signs, and exact tensor linear algebra.

A vector superspace carries a parity on each basis vector.  Permuting tensor
factors costs a sign for every interchanged pair of odd factors; everything
downstream (antisymmetrizers, duals, relation subspaces) is built on that one
convention, so this demo spells it out on small examples.
"""

from superkoszul import (
    Permutation,
    SuperSpace,
    TensorVector,
    antisymmetrizer_image,
    dual_complement,
    perm_action,
    wedge_dimension,
)

# one even, one odd basis vector
V = SuperSpace.standard(1, 1)
print(f"V = Q^(1|1), format {V.format}, superdimension {V.superdim()}")

swap = Permutation((2, 1))
for word in [(1, 2), (2, 2)]:
    v = TensorVector.basis(V, word)
    print(f"  swap {v}  ->  {perm_action(swap, v)}")

print()
print("antisymmetric tensors (images of the antisymmetrizer):")
for n in range(5):
    im = antisymmetrizer_image(V, n)
    print(f"  degree {n}: dim {im.dim} (closed form {wedge_dimension(1, 1, n)})")
print("the odd direction never dies: x_2 x x_2 x ... survives antisymmetrization")

print()
W = SuperSpace.standard(0, 1)
cube = antisymmetrizer_image(W, 3)
print(f"pure odd line, cube: dim {cube.dim}, basis {cube.basis_vectors()}")

print()
print("duality pairs a word against the *reversal* of the other word;")
R = antisymmetrizer_image(V, 2)
perp = dual_complement(R)
print(f"for R = antisymmetric square (dim {R.dim}), the annihilator has dim {perp.dim}")
print(f"double annihilator equals R again: {dual_complement(perp) == R}")

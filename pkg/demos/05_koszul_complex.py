"""The Koszul complex, exactness degree by degree, and Tor tables.

The complex alternates one-step and (N-1)-step contractions between free
modules built on the graded dual of the dual algebra.  Exactness in positive
homological degrees - the Koszul property - is checked by exact rank counts
per total degree.  Tor dimensions come from an independently constructed
minimal resolution, so the two views corroborate each other.
"""

from superkoszul import (
    SuperSpace,
    hilbert_series,
    koszul_check,
    koszul_duality_check,
    koszul_matrix,
    n_symmetric,
    tor_dims,
    yang_mills,
)

A = n_symmetric(SuperSpace.standard(1, 1), 2)
sl = koszul_matrix(A, 1, 3)
print(f"{A.label}: delta_1 at total degree 3 is {sl.source_dim} -> {sl.target_dim}, rank {sl.rank()}")
print(f"exactness through degree 8: {koszul_check(A, 8)}")

S = n_symmetric(SuperSpace.standard(2, 1), 3)
print(f"\n{S.label}: {koszul_check(S, 8)}")
print(f"duality: {koszul_duality_check(S, 8)}")

Y = yang_mills(SuperSpace.standard(3, 0))
print(f"\n{Y.label}: Hilbert series {hilbert_series(Y, 6)}")
print("Tor table (minimal resolution):")
print(tor_dims(Y, 4, 6))
print("concentrated in degrees 0, 1, 3, 4: the jump function of a cubic Koszul algebra")

M = yang_mills(SuperSpace.standard(1, 1))
check = koszul_duality_check(M, 6)
print(f"\n{M.label}: duality product {check.product}")
print("the t^5 coefficient survives, so the mixed algebra is not Koszul")

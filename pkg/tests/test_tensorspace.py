"""Tensor powers, the signed permutation action, and exact subspaces."""

import random
from fractions import Fraction

import pytest

from superkoszul.superpoly import VariableTable
from superkoszul.tensorspace import (
    Permutation,
    Subspace,
    SuperSpace,
    TensorVector,
    all_permutations,
    antisymmetrizer_image,
    dual_complement,
    perm_action,
    subspace_combine,
    subspace_intersection,
    subspace_sum,
    supertrace,
    wedge_dimension,
)


def test_swap_of_two_odd_vectors_picks_up_a_sign():
    sp = SuperSpace((1, 1))
    v = TensorVector.basis(sp, (1, 2))
    swapped = perm_action(Permutation((2, 1)), v)
    assert swapped == TensorVector(sp, 2, {(2, 1): Fraction(-1)})


def test_swap_of_two_even_vectors_has_no_sign():
    sp = SuperSpace((0, 0))
    v = TensorVector.basis(sp, (1, 2))
    assert perm_action(Permutation((2, 1)), v) == TensorVector.basis(sp, (2, 1))


def test_action_is_a_representation():
    rng = random.Random(2)
    sp = SuperSpace((0, 1, 1))
    perms = all_permutations(4)
    for _ in range(25):
        sigma, tau = rng.choice(perms), rng.choice(perms)
        word = tuple(rng.randint(1, 3) for _ in range(4))
        v = TensorVector.basis(sp, word)
        assert perm_action(sigma, perm_action(tau, v)) == perm_action(sigma * tau, v)


def test_generators_satisfy_braid_and_involution():
    sp = SuperSpace((0, 1))
    s1, s2 = Permutation.transposition(3, 1), Permutation.transposition(3, 2)
    for word in sp.words(3):
        v = TensorVector.basis(sp, word)
        assert perm_action(s1, perm_action(s1, v)) == v
        lhs = perm_action(s1, perm_action(s2, perm_action(s1, v)))
        rhs = perm_action(s2, perm_action(s1, perm_action(s2, v)))
        assert lhs == rhs


def test_length_counts_inversions():
    sigma = Permutation((3, 1, 2))
    assert sigma.length() == 2
    assert sigma.inversions() == [(1, 2), (1, 3)]
    word = sigma.reduced_word()
    assert len(word) == 2
    prod = Permutation.identity(3)
    for i in word:
        prod = prod * Permutation.transposition(3, i)
    assert prod == sigma


# -- antisymmetric tensors ----------------------------------------------------


@pytest.mark.parametrize("p,q", [(p, q) for p in range(5) for q in range(5) if 1 <= p + q <= 4])
def test_antisymmetrizer_dimensions_match_closed_form(p, q):
    sp = SuperSpace.standard(p, q)
    for n in range(6):
        assert antisymmetrizer_image(sp, n).dim == wedge_dimension(p, q, n)


def test_wedge_generating_function():
    # (1+t)^p / (1-t)^q expanded: check a mixed case against the dimensions
    p, q, K = 2, 1, 6
    from math import comb

    # direct convolution of (1+t)^p with 1/(1-t)^q
    binom_part = [Fraction(comb(p, m)) for m in range(K + 1)]
    geom_part = [Fraction(comb(q + s - 1, s)) if s else Fraction(1) for s in range(K + 1)]
    series = [
        sum(binom_part[m] * geom_part[n - m] for m in range(n + 1))
        for n in range(K + 1)
    ]
    assert series == [wedge_dimension(p, q, n) for n in range(K + 1)]


def test_pure_odd_cube_is_spanned_by_the_repeated_word():
    sp = SuperSpace.standard(0, 1)
    im = antisymmetrizer_image(sp, 3)
    assert im.dim == 1
    assert im.rows == {(1, 1, 1): {(1, 1, 1): Fraction(1)}}


# -- subspace arithmetic ------------------------------------------------------


def rand_subspace(rng, sp, degree, rows=2):
    out = Subspace(sp, degree)
    words = list(sp.words(degree))
    for _ in range(rows):
        parity = rng.randint(0, 1)
        pool = [w for w in words if sp.word_parity(w) == parity]
        vec = {}
        for w in rng.sample(pool, min(3, len(pool))):
            c = rng.randint(-3, 3)
            if c:
                vec[w] = Fraction(c)
        if vec:
            out.insert(vec)
    return out


def test_sum_and_intersection_idempotent():
    rng = random.Random(9)
    sp = SuperSpace.standard(2, 1)
    A = rand_subspace(rng, sp, 2)
    assert subspace_combine("sum", A, A) == A
    assert subspace_combine("intersection", A, A) == A


def test_dimension_formula_for_sum_and_intersection():
    rng = random.Random(13)
    sp = SuperSpace.standard(2, 1)
    for _ in range(20):
        A = rand_subspace(rng, sp, 2)
        B = rand_subspace(rng, sp, 2)
        s = subspace_sum(A, B)
        c = subspace_intersection(A, B)
        assert s.dim + c.dim == A.dim + B.dim
        assert s.contains_subspace(A) and s.contains_subspace(B)
        assert A.contains_subspace(c) and B.contains_subspace(c)


def test_two_sided_placements_intersect_to_wedge():
    # relations of the cubic symmetric algebra: (R x V) cap (V x R) is the
    # degree-4 antisymmetric space, trivial for 3 generators, a line for 4
    for d, expected in ((3, 0), (4, 1)):
        sp = SuperSpace.standard(d, 0)
        R = antisymmetrizer_image(sp, 3)
        left = Subspace(sp, 4)
        right = Subspace(sp, 4)
        for row in R.rows.values():
            for letter in range(1, d + 1):
                left.insert({w + (letter,): c for w, c in row.items()})
                right.insert({(letter,) + w: c for w, c in row.items()})
        cap = subspace_intersection(left, right)
        assert cap.dim == expected
        assert cap == antisymmetrizer_image(sp, 4)


def test_subspace_requires_parity_homogeneous_rows():
    sp = SuperSpace((0, 1))
    with pytest.raises(ValueError):
        Subspace(sp, 1, [{(1,): Fraction(1), (2,): Fraction(1)}])


# -- duality -------------------------------------------------------------------


def test_dual_of_zero_and_full():
    sp = SuperSpace.standard(1, 1)
    zero = Subspace(sp, 2)
    assert dual_complement(zero).dim == 4
    assert dual_complement(Subspace.full(sp, 2)).dim == 0


def test_dual_complement_dimensions_and_involution():
    rng = random.Random(17)
    sp = SuperSpace.standard(1, 2)
    for _ in range(15):
        R = rand_subspace(rng, sp, 2)
        perp = dual_complement(R)
        assert R.dim + perp.dim == sp.dim ** 2
        assert dual_complement(perp) == R


def test_quantum_superspace_dual_basis():
    # relations x2 x x2 and x2 x x1 - q (-1)^(1^ 2^) x1 x x2 for a 1|1 space;
    # the annihilator under the order-reversing pairing is spanned by
    # x1 x x1 and x1 x x2 + q (-1)^(1^ 2^) x2 x x1
    q = Fraction(5, 3)
    sp = SuperSpace((0, 1))
    sign = -1 if sp.parity(1) * sp.parity(2) else 1
    R = Subspace(sp, 2, [
        {(2, 2): Fraction(1)},
        {(2, 1): Fraction(1), (1, 2): -q * sign},
    ])
    perp = dual_complement(R)
    # annihilator line x1 x x2 + q (-1)^(1^ 2^) x2 x x1 up to normalization
    expected = Subspace(sp, 2, [
        {(1, 1): Fraction(1)},
        {(2, 1): Fraction(1), (1, 2): q * sign},
    ])
    assert perp == expected
    # pairing check: every dual row annihilates every relation under reversal
    for row in perp.rows.values():
        for rel in R.rows.values():
            val = sum(row.get(w[::-1], Fraction(0)) * c for w, c in rel.items())
            assert val == 0


# -- supertrace -----------------------------------------------------------------


def test_supertrace_of_identity_is_superdimension():
    fmt = (0, 0, 1)
    ident = [[Fraction(1) if i == j else Fraction(0) for j in range(3)] for i in range(3)]
    assert supertrace(ident, fmt) == 1  # p - q = 2 - 1


def test_supertrace_of_generic_matrix():
    table = VariableTable()
    a = table.add("a", 0)
    b = table.add("b", 1)
    c = table.add("c", 1)
    d = table.add("d", 0)
    A = [[table.variable(a), table.variable(b)], [table.variable(c), table.variable(d)]]
    fmt = (0, 1)
    assert supertrace(A, fmt) == table.variable(a) - table.variable(d)
    # square the matrix by hand: str(X^2) = a^2 + 2bc - d^2
    sq = [
        [A[0][0] * A[0][0] + A[0][1] * A[1][0], A[0][0] * A[0][1] + A[0][1] * A[1][1]],
        [A[1][0] * A[0][0] + A[1][1] * A[1][0], A[1][0] * A[0][1] + A[1][1] * A[1][1]],
    ]
    bc = table.variable(b) * table.variable(c)
    aa = table.variable(a) * table.variable(a)
    dd = table.variable(d) * table.variable(d)
    assert supertrace(sq, fmt) == aa + bc + bc - dd


def test_supertrace_rejects_parity_violation():
    table = VariableTable()
    u = table.add("u", 1)
    bad = [[table.variable(u)]]
    with pytest.raises(ValueError):
        supertrace(bad, (0,))

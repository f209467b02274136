"""Presentations, graded components, duals, products, and rewriting."""

from fractions import Fraction
from math import comb

import pytest

from superkoszul.hecke import dj_operator, supersymmetry_operator
from superkoszul.homogeneous import (
    NonConfluentError,
    custom_algebra,
    end_algebra,
    free_line,
    homog_product,
    lambda_operator_algebra,
    n_symmetric,
    quantum_superspace,
    s_operator_algebra,
    segre_dims_match,
    tensor_algebra,
    yang_mills,
)
from superkoszul.tensorspace import (
    SuperSpace,
    TensorVector,
    antisymmetrizer_image,
    dual_complement,
    wedge_dimension,
)


def quantum_dim(p, q, n):
    # ordered monomials: r even letters with repetition, n-r distinct odd ones
    total = 0
    for r in range(n + 1):
        even_count = comb(r + p - 1, p - 1) if p else (1 if r == 0 else 0)
        total += even_count * comb(q, n - r)
    return total


def test_quantum_superspace_dimensions():
    A = quantum_superspace(SuperSpace.standard(1, 1))
    assert A.dim_component(2) == 2
    for p in range(3):
        for q in range(3):
            if not 1 <= p + q <= 3:
                continue
            B = quantum_superspace(SuperSpace.standard(p, q), {(1, 2): Fraction(7, 2)} if p + q >= 2 else None)
            for n in range(5):
                assert B.dim_component(n) == quantum_dim(p, q, n), (p, q, n)


def test_tensor_algebra_is_free():
    T = tensor_algebra(SuperSpace.standard(1, 1), 2)
    assert T.dims(5) == [2 ** n for n in range(6)]


def test_cubic_symmetric_algebra_on_two_even_generators_is_free():
    S = n_symmetric(SuperSpace.standard(2, 0), 3)
    assert S.R.dim == 0
    assert S.dims(4) == [1, 2, 4, 8, 16]


def test_dimension_complement_identity():
    A = quantum_superspace(SuperSpace.standard(1, 2))
    for n in range(5):
        Rn, dim = A.graded_component(n)
        assert dim + Rn.dim == A.dim_V ** n


# -- duals ---------------------------------------------------------------------


def test_dual_of_free_algebra_is_truncated():
    T = tensor_algebra(SuperSpace.standard(1, 1), 3)
    assert T.dual_algebra().dims(5) == [1, 2, 4, 0, 0, 0]


def test_dual_of_quantum_superspace():
    # coefficientwise, the dual relations agree with the flipped-format
    # quantum superspace at parameters (-1)^(i^+j^) q_ij
    fmt = (0, 1)
    q12 = Fraction(1, 2)
    A = quantum_superspace(SuperSpace(fmt), {(1, 2): q12})
    flipped = quantum_superspace(
        SuperSpace(tuple(1 - x for x in fmt)),
        {(1, 2): q12 * (-1) ** (fmt[0] + fmt[1])},
    )
    assert dual_complement(A.R).rows == flipped.R.rows


def test_double_dual_restores_the_relations():
    A = n_symmetric(SuperSpace.standard(2, 1), 2)
    assert A.dual_algebra().dual_algebra().R == A.R


def test_dual_star_components_of_the_symmetric_algebra():
    for (p, q), N in [((1, 1), 2), ((2, 1), 3), ((0, 2), 2)]:
        S = n_symmetric(SuperSpace.standard(p, q), N)
        for n in range(N):
            assert S.dual_star_component(n).dim == (p + q) ** n
        for n in range(N, 7):
            assert S.dual_star_component(n) == antisymmetrizer_image(S.space, n)


def test_dual_star_dims_equal_dual_algebra_dims():
    A = quantum_superspace(SuperSpace.standard(1, 1), {(1, 2): Fraction(3)})
    dual = A.dual_algebra()
    for n in range(6):
        assert A.dual_star_component(n).dim == dual.dim_component(n)


def test_yang_mills_dual_components():
    Y = yang_mills(SuperSpace.standard(3, 0))
    assert [Y.dual_star_component(n).dim for n in range(7)] == [1, 3, 9, 3, 1, 0, 0]


# -- products ------------------------------------------------------------------


def test_white_product_with_the_line_preserves_dimensions():
    A = n_symmetric(SuperSpace.standard(1, 1), 2)
    W = homog_product("white", free_line(2), A)
    assert [W.dim_component(n) for n in range(6)] == [A.dim_component(n) for n in range(6)]


def test_black_product_of_free_algebras_is_free():
    T1 = tensor_algebra(SuperSpace.standard(1, 0), 2)
    T2 = tensor_algebra(SuperSpace.standard(0, 1), 2)
    assert homog_product("black", T1, T2).R.dim == 0


def test_product_duality_exchange():
    # dimensions of (A o A)^! agree with A^! * A^! through degree 4
    A = n_symmetric(SuperSpace.standard(1, 1), 2)
    lhs = homog_product("white", A, A).dual_algebra()
    rhs = homog_product("black", A.dual_algebra(), A.dual_algebra())
    for n in range(5):
        assert lhs.dim_component(n) == rhs.dim_component(n)


def test_product_duality_exchange_swaps_the_factors():
    # for distinct factors the dual of the white product matches the black
    # product taken in the opposite order
    A = n_symmetric(SuperSpace.standard(1, 1), 2)
    B = quantum_superspace(SuperSpace.standard(2, 0), {(1, 2): Fraction(3)})
    lhs = homog_product("white", A, B).dual_algebra()
    rhs = homog_product("black", B.dual_algebra(), A.dual_algebra())
    for n in range(5):
        assert lhs.dim_component(n) == rhs.dim_component(n)


def test_segre_dimension_law():
    A = n_symmetric(SuperSpace.standard(1, 1), 2)
    B = quantum_superspace(SuperSpace.standard(2, 0), {(1, 2): Fraction(5)})
    assert segre_dims_match(A, B, 5)


def test_mismatched_degrees_rejected():
    with pytest.raises(ValueError):
        homog_product("white", free_line(2), yang_mills(SuperSpace.standard(2, 0)))


def test_end_of_free_algebra_is_free():
    E = end_algebra(tensor_algebra(SuperSpace.standard(1, 1), 2))
    assert E.dims(3) == [1, 4, 16, 64]


def test_end_of_polynomial_line():
    E = end_algebra(n_symmetric(SuperSpace.standard(1, 0), 2))
    assert E.dims(4) == [1, 1, 1, 1, 1]


def test_end_of_the_even_plane():
    E = end_algebra(n_symmetric(SuperSpace.standard(2, 0), 2))
    assert E.dim_component(2) == 16 - 3


# -- rewriting ------------------------------------------------------------------


def test_rewrite_map_of_the_even_plane():
    A = n_symmetric(SuperSpace.standard(2, 0), 2)
    assert A.rewrite_map() == {(1, 2): {(2, 1): Fraction(1)}}


def test_reduction_operator_is_a_projection_with_kernel_R():
    for A in (
        n_symmetric(SuperSpace.standard(1, 1), 2),
        n_symmetric(SuperSpace.standard(2, 1), 3),
        quantum_superspace(SuperSpace.standard(1, 2), {(1, 2): Fraction(3, 4)}),
        yang_mills(SuperSpace.standard(2, 0)),
    ):
        S = A.reduction_operator()
        # S fixes reduced words, lowers pivots, and squares to itself
        for w in A.space.words(A.N):
            v = TensorVector.basis(A.space, w)
            image = S.apply(v)
            if S.reduced(w):
                assert image == v
            else:
                assert all(u > w for u in image.coeffs)  # strictly smaller monomials
            assert S.apply(image) == image
        # the kernel recovers the relation subspace, so S vanishes on it
        assert S.kernel() == A.R
        for row in A.R.rows.values():
            assert S.apply(TensorVector(A.space, A.N, row)).is_zero()


def test_rewrite_map_of_an_odd_line():
    A = n_symmetric(SuperSpace.standard(0, 1), 2)
    assert A.rewrite_map() == {(1, 1): {}}


def test_free_algebra_has_no_rewrites():
    assert tensor_algebra(SuperSpace.standard(1, 1), 2).rewrite_map() == {}


def test_normal_form_sorts_commuting_generators():
    A = n_symmetric(SuperSpace.standard(2, 0), 2)
    assert A.normal_form_word((1, 2, 1)) == {(2, 1, 1): Fraction(1)}
    word = (1, 2, 2, 1)
    assert A.normal_form_word(word) == {(2, 2, 1, 1): Fraction(1)}


def test_normal_form_kills_odd_squares():
    A = n_symmetric(SuperSpace.standard(1, 1), 2)
    assert A.normal_form_word((2, 2)) == {}


def test_reduced_words_are_fixed_points():
    A = n_symmetric(SuperSpace.standard(1, 1), 2)
    for w in A.reduced_words(4):
        assert A.normal_form_word(w) == {w: Fraction(1)}


def test_normal_form_is_idempotent_and_a_congruence():
    A = n_symmetric(SuperSpace.standard(2, 1), 2)
    Rn, _ = A.graded_component(3)
    for w in A.space.words(3):
        nf = A.normal_form_word(w)
        diff = dict(nf)
        diff[w] = diff.get(w, Fraction(0)) - 1
        assert Rn.contains(diff)
        v = TensorVector(A.space, 3, nf)
        assert A.normal_form(v) == v


def test_rewriting_strategy_does_not_matter_when_confluent():
    A = n_symmetric(SuperSpace.standard(1, 2), 3)
    for w in A.space.words(5):
        assert A.normal_form_word(w) == A.normal_form_word(w, rightmost=True)


def test_reduced_word_count_matches_graded_dimension():
    for algebra in (
        n_symmetric(SuperSpace.standard(2, 1), 3),
        quantum_superspace(SuperSpace.standard(1, 2), {(1, 2): Fraction(2)}),
    ):
        for n in range(6):
            assert len(algebra.reduced_words(n)) == algebra.dim_component(n)


def test_non_confluent_algebra_refuses_normal_forms():
    A = custom_algebra((0, 0), 2, [[(1, (1, 1)), (-1, (1, 2))]])
    assert not A.confluence_report().passed
    with pytest.raises(NonConfluentError):
        A.normal_form_word((1, 1, 1))


# -- built-in families ----------------------------------------------------------


def test_n_symmetric_relation_dimension():
    A = n_symmetric(SuperSpace.standard(1, 1), 2)
    assert A.R.dim == wedge_dimension(1, 1, 2) == 2


def test_yang_mills_presentation_of_the_heisenberg_flavor():
    # two even generators: relations [x,[x,y]] and [y,[y,x]]
    Y = yang_mills(SuperSpace.standard(2, 0))
    assert Y.R.dim == 2
    expected = custom_algebra(
        (0, 0),
        3,
        [
            [(1, (1, 1, 2)), (-2, (1, 2, 1)), (1, (2, 1, 1))],
            [(1, (2, 2, 1)), (-2, (2, 1, 2)), (1, (1, 2, 2))],
        ],
    )
    assert Y.R == expected.R


def test_yang_mills_congruence_diagonalization():
    # a non-diagonal symmetric metric reduces to a diagonal presentation
    G = [[0, 1], [1, 0]]
    Y = yang_mills(SuperSpace.standard(2, 0), G)
    assert Y.R.dim == 2


def test_yang_mills_rejects_bad_metric():
    with pytest.raises(ValueError):
        yang_mills(SuperSpace.standard(1, 1), [[1, 1], [1, 1]])  # parity-mixing entry
    with pytest.raises(ValueError):
        yang_mills(SuperSpace.standard(2, 0), [0, 1])  # singular diagonal


def test_hecke_operator_algebras_match_the_symmetric_family():
    sp = SuperSpace.standard(1, 1)
    S = s_operator_algebra(supersymmetry_operator(sp), 2)
    assert S.R == n_symmetric(sp, 2).R


def test_lambda_algebra_of_a_scalar_operator():
    A = lambda_operator_algebra(dj_operator(1, 0, Fraction(2)), 2)
    assert A.dims(4) == [1, 1, 0, 0, 0]  # truncated line: x^2 = 0


def test_custom_algebra_validation():
    with pytest.raises(ValueError):
        custom_algebra((0, 0), 3, [[(1, (1, 2))]])  # degree != N
    with pytest.raises(ValueError):
        custom_algebra((0, 0), 2, [[(1, (1, 3))]])  # letter out of range

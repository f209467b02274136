"""Generic supermatrices, Berezinians, supercharacters, the master identity."""

import random
from fractions import Fraction

import pytest

from superkoszul.homogeneous import n_symmetric
from superkoszul.macmahon import (
    GenericSupermatrix,
    berezinian_series,
    bosonic_factor,
    char_function,
    closed_form_hilbert,
    coaction_power,
    coaction_tensor,
    diagonal_coefficients,
    endo_tensor,
    fermionic_factor,
    generic_coaction,
    lambda_set,
    master_verify,
    supercharacter,
)
from superkoszul.superpoly import TruncatedSeries
from superkoszul.tensorspace import (
    SuperSpace,
    TensorVector,
    antisymmetrizer_element,
    group_algebra_action,
    supertrace,
)


def test_generic_supermatrix_parities():
    X = GenericSupermatrix(1, 1)
    assert X.entry_parity(1, 1) == 0 and X.entry_parity(2, 2) == 0
    assert X.entry_parity(1, 2) == 1 and X.entry_parity(2, 1) == 1
    assert GenericSupermatrix(2, 0).entry_parity(1, 2) == 0
    assert GenericSupermatrix(0, 1).entry_parity(1, 1) == 0


def test_berezinian_of_a_pure_even_line():
    X = GenericSupermatrix(1, 0)
    ber = berezinian_series(X, 3)
    x = X.entry(1, 1)
    assert ber.coeffs[0] == 1 and ber.coeffs[1] == x
    assert ber.coeffs[2].is_zero() and ber.coeffs[3].is_zero()


def test_berezinian_of_a_pure_odd_line():
    X = GenericSupermatrix(0, 1)
    ber = berezinian_series(X, 4)
    x = X.entry(1, 1)
    acc = X.table.one()
    for n in range(5):
        assert ber.coeffs[n] == acc
        acc = acc * (-x)


def test_berezinian_of_the_1_1_matrix():
    X = GenericSupermatrix(1, 1)
    a, b = X.entry(1, 1), X.entry(1, 2)
    c, d = X.entry(2, 1), X.entry(2, 2)
    es = char_function(X, 2)  # hard-checks the two routes against each other
    assert es[1] == a - d
    assert es[2] == d * d - a * d - b * c


def test_characteristic_coefficients_at_the_identity():
    # counit sends the matrix to the identity, where the characteristic
    # function is (1+t)^(p-q)
    from math import comb

    for (p, q) in [(2, 0), (2, 1), (1, 1), (1, 2)]:
        X = GenericSupermatrix(p, q)
        es = char_function(X, 4)
        for n in range(5):
            value = X.counit(es[n])
            if p >= q:
                assert value == comb(p - q, n)
            else:
                assert value == (-1) ** n * comb(q - p + n - 1, n)


def test_pure_even_second_coefficient_is_the_determinant():
    X = GenericSupermatrix(2, 0)
    es = char_function(X, 2)
    det = X.entry(1, 1) * X.entry(2, 2) - X.entry(1, 2) * X.entry(2, 1)
    assert es[2] == det


@pytest.mark.parametrize("p,q", [(p, q) for p in range(3) for q in range(3) if p + q >= 1])
def test_dual_route_equality_to_order_five(p, q):
    char_function(GenericSupermatrix(p, q), 5)  # raises on any mismatch


@pytest.mark.parametrize("p,q", [(3, 0), (2, 1), (1, 2), (0, 3)])
def test_dual_route_equality_three_generators_to_order_six(p, q):
    char_function(GenericSupermatrix(p, q), 6)


def test_supertrace_counit_is_the_superdimension():
    X = GenericSupermatrix(2, 1)
    p1 = X.power_sums(1)[0]
    assert X.counit(p1) == 1  # p - q


def test_power_sum_of_the_1_1_matrix():
    X = GenericSupermatrix(1, 1)
    p1, p2 = X.power_sums(2)
    a, b = X.entry(1, 1), X.entry(1, 2)
    c, d = X.entry(2, 1), X.entry(2, 2)
    assert p1 == a - d
    assert p2 == a * a + b * c + b * c - d * d


# -- supercharacters --------------------------------------------------------------


def rand_homog_matrix(rng, fmt, parity):
    d = len(fmt)
    return [
        [
            Fraction(rng.randint(-4, 4)) if (fmt[i] + fmt[j]) % 2 == parity else Fraction(0)
            for j in range(d)
        ]
        for i in range(d)
    ]


def test_supercharacter_of_the_identity():
    X = GenericSupermatrix(2, 1)
    b, fmt = generic_coaction(X)
    ident = [[Fraction(1) if i == j else Fraction(0) for j in range(3)] for i in range(3)]
    chi = supercharacter(b, ident, fmt)
    expected = X.entry(1, 1) + X.entry(2, 2) - X.entry(3, 3)
    assert chi == expected


def test_counit_of_supercharacter_is_supertrace():
    rng = random.Random(101)
    for (p, q) in [(1, 1), (2, 1)]:
        X = GenericSupermatrix(p, q)
        b, fmt = generic_coaction(X)
        for _ in range(100):
            F = rand_homog_matrix(rng, fmt, rng.randint(0, 1))
            assert X.counit(supercharacter(b, F, fmt)) == supertrace(F, fmt)


def test_supercharacter_multiplicativity():
    rng = random.Random(202)
    for (p, q) in [(1, 1), (2, 1)]:
        X = GenericSupermatrix(p, q)
        b, fmt = generic_coaction(X)
        bb, ffmt = coaction_tensor(b, fmt, b, fmt, X.table)
        for _ in range(100):
            parity_f, parity_g = rng.randint(0, 1), rng.randint(0, 1)
            F = rand_homog_matrix(rng, fmt, parity_f)
            G = rand_homog_matrix(rng, fmt, parity_g)
            FG = endo_tensor(F, fmt, G, fmt, parity_g)
            assert supercharacter(bb, FG, ffmt) == supercharacter(b, F, fmt) * supercharacter(b, G, fmt)


def test_supercharacter_additivity_on_block_coactions():
    rng = random.Random(303)
    X = GenericSupermatrix(1, 1)
    b, fmt = generic_coaction(X)
    d = len(fmt)
    zero = X.table.zero()
    big_b = [
        [
            b[i % d][j % d] if (i < d) == (j < d) else zero
            for j in range(2 * d)
        ]
        for i in range(2 * d)
    ]
    big_fmt = fmt + fmt
    for _ in range(100):
        parity = rng.randint(0, 1)
        F = rand_homog_matrix(rng, fmt, parity)
        G = rand_homog_matrix(rng, fmt, parity)
        upper = rand_homog_matrix(rng, fmt, parity)
        big_F = [
            [
                (F[i][j] if i < d and j < d else
                 G[i - d][j - d] if i >= d and j >= d else
                 upper[i][j - d] if i < d <= j else Fraction(0))
                for j in range(2 * d)
            ]
            for i in range(2 * d)
        ]
        lhs = supercharacter(big_b, big_F, big_fmt)
        rhs = supercharacter(b, F, fmt) + supercharacter(b, G, fmt)
        assert lhs == rhs


def test_fermionic_coefficients_are_antisymmetrizer_characters():
    # the m-th coefficient of the characteristic function is the
    # supercharacter of the antisymmetrizer projection on the m-th power
    for (p, q) in [(1, 1), (2, 0)]:
        X = GenericSupermatrix(p, q)
        es = char_function(X, 3)
        sp = X.space
        for m in (1, 2, 3):
            bb, ffmt = coaction_power(X, m)
            words = list(sp.words(m))
            index = {w: k for k, w in enumerate(words)}
            Y = antisymmetrizer_element(m)
            cols = {}
            for w in words:
                img = group_algebra_action(Y, TensorVector.basis(sp, w))
                cols[w] = img.coeffs
            F = [[Fraction(0)] * len(words) for _ in range(len(words))]
            for w, col in cols.items():
                for u, c in col.items():
                    F[index[u]][index[w]] = c
            assert supercharacter(bb, F, ffmt) == es[m]


# -- index words and the master identity ---------------------------------------------


def test_lambda_words_for_the_super_line_pair():
    assert lambda_set(1, 1, 2, 2) == [(1, 1), (2, 1)]
    assert lambda_set(1, 0, 2, 4) == [(1, 1, 1, 1)]


def test_lambda_words_count_matches_graded_dimension():
    for (p, q) in [(1, 1), (2, 1), (0, 2)]:
        for N in (2, 3):
            A = n_symmetric(SuperSpace.standard(p, q), N)
            for length in range(6):
                assert len(lambda_set(p, q, N, length)) == A.dim_component(length)


def test_diagonal_coefficients_of_the_line():
    X = GenericSupermatrix(1, 0)
    A = n_symmetric(SuperSpace.standard(1, 0), 2)
    x = X.entry(1, 1)
    for length in (1, 2, 3):
        diag = diagonal_coefficients(X, A, length)
        assert diag == {(1,) * length: x ** length}


def test_bosonic_factor_low_orders():
    X = GenericSupermatrix(1, 1)
    series = bosonic_factor(1, 1, 2, 2, X=X)
    assert series.coeffs[0] == 1
    assert series.coeffs[1] == X.entry(1, 1) - X.entry(2, 2)  # the supertrace


def test_bosonic_factor_counit_counts_words():
    X = GenericSupermatrix(1, 1)
    series = bosonic_factor(1, 1, 3, 4, X=X)
    for length in range(5):
        signed = sum(
            (-1) ** (sum(1 for a in w if a > 1) % 2)
            for w in lambda_set(1, 1, 3, length)
        )
        assert X.counit(series.coeffs[length]) == signed


def test_truncation_ceiling_is_enforced():
    with pytest.raises(ValueError):
        bosonic_factor(1, 0, 2, 11)
    # explicit override lifts it
    assert bosonic_factor(1, 0, 2, 11, ceiling=12).coeffs[11] is not None


@pytest.mark.parametrize("p,q,N", [(1, 0, 2), (0, 1, 2), (1, 1, 2), (1, 1, 3), (2, 0, 3)])
def test_master_identity_small(p, q, N):
    assert master_verify(p, q, N, 4).passed


def test_master_identity_fermionic_factor_signs():
    X = GenericSupermatrix(1, 0)
    right = fermionic_factor(X, 3, 4)
    es = char_function(X, 4)
    assert right.coeffs[0] == es[0]
    assert right.coeffs[1] == -es[1]
    assert right.coeffs[2].is_zero()
    assert right.coeffs[3] == es[3]
    assert right.coeffs[4] == -es[4]


# -- closed-form Hilbert series -----------------------------------------------------


def test_closed_form_dim_series_matches_components():
    for (p, q, N) in [(1, 1, 2), (2, 1, 2), (1, 2, 3)]:
        series = closed_form_hilbert(p, q, N, 6, kind="dim")
        A = n_symmetric(SuperSpace.standard(p, q), N)
        assert [int(c) for c in series.coeffs] == A.dims(6)


def test_sdim_series_of_balanced_spaces_is_one():
    for N in (2, 3):
        series = closed_form_hilbert(1, 1, N, 6, kind="sdim")
        assert series == TruncatedSeries.one(6)


def test_sdim_series_of_the_odd_line():
    series = closed_form_hilbert(0, 1, 2, 5, kind="sdim")
    assert [int(c) for c in series.coeffs] == [1, -1, 0, 0, 0, 0]

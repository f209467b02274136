"""Supercommutative polynomial and truncated-series arithmetic."""

import random
from fractions import Fraction
from itertools import combinations

import pytest

from superkoszul.superpoly import (
    SuperPolynomial,
    TruncatedSeries,
    VariableTable,
    newton_elementary,
)


def make_table(evens, odds):
    table = VariableTable()
    for name in evens:
        table.add(name, 0)
    for name in odds:
        table.add(name, 1)
    return table


def test_odd_variables_anticommute_and_square_to_zero():
    table = make_table([], ["u", "v"])
    u, v = table.variable(0), table.variable(1)
    assert u * v == -(v * u)
    assert (v * u).terms == {((), (0, 1)): Fraction(-1)}
    assert (u * u).is_zero()


def test_mixed_product_cancellation():
    # (a + u)(a - u) = a^2 because the cross terms cancel and u^2 = 0
    table = make_table(["a"], ["u"])
    a, u = table.variable(0), table.variable(1)
    assert (a + u) * (a - u) == a * a


def test_tables_do_not_mix():
    t1 = make_table(["a"], [])
    t2 = make_table(["a"], [])
    with pytest.raises(ValueError):
        t1.variable(0) * t2.variable(0)


def rand_poly(rng, table, n_terms=3, max_deg=2):
    out = table.zero()
    n_vars = len(table)
    for _ in range(n_terms):
        term = table.constant(rng.randint(-3, 3))
        for _ in range(rng.randint(0, max_deg)):
            term = term * table.variable(rng.randrange(n_vars))
        out = out + term
    return out


def rand_homogeneous(rng, table, parity):
    while True:
        p = rand_poly(rng, table)
        terms = {m: c for m, c in p.terms.items() if len(m[1]) % 2 == parity}
        if terms:
            return SuperPolynomial(table, terms)


def test_ring_laws_on_random_polynomials():
    rng = random.Random(7)
    table = make_table(["a", "b"], ["u", "v", "w"])
    for _ in range(40):
        x, y, z = (rand_poly(rng, table) for _ in range(3))
        assert (x * y) * z == x * (y * z)
        assert x * (y + z) == x * y + x * z


def test_supercommutativity_on_homogeneous_elements():
    rng = random.Random(11)
    table = make_table(["a"], ["u", "v", "w"])
    for _ in range(40):
        px, py = rng.randint(0, 1), rng.randint(0, 1)
        x = rand_homogeneous(rng, table, px)
        y = rand_homogeneous(rng, table, py)
        sign = -1 if px and py else 1
        assert x * y == (y * x) * Fraction(sign)


def test_evaluate_rejects_nonzero_odd_assignment():
    table = make_table(["a"], ["u"])
    p = table.variable(0) + table.variable(1)
    with pytest.raises(ValueError):
        p.evaluate({0: Fraction(1), 1: Fraction(1)})
    assert p.evaluate({0: Fraction(5), 1: Fraction(0)}) == 5


def test_evaluate_requires_assignment():
    table = make_table(["a", "b"], [])
    p = table.variable(0) * table.variable(1)
    with pytest.raises(KeyError):
        p.evaluate({0: Fraction(1)})


# -- truncated series -------------------------------------------------------


def test_geometric_series_inverse():
    s = TruncatedSeries(3, [Fraction(1), Fraction(-1), Fraction(0), Fraction(0)])
    assert s.inverse().coeffs == [1, 1, 1, 1]


def test_inverse_with_odd_coefficient():
    # (1 + u t)^-1 = 1 - u t exactly: u^2 = 0 kills the t^2 term
    table = make_table([], ["u"])
    u = table.variable(0)
    s = TruncatedSeries(2, [table.one(), u, table.zero()])
    inv = s.inverse()
    assert inv.coeffs[0] == table.one()
    assert inv.coeffs[1] == -u
    assert inv.coeffs[2].is_zero()
    assert s * inv == TruncatedSeries.one(2, one=table.one(), zero=table.zero())


def test_inverse_of_quartic_denominator():
    # 1/(1 - 3t + 3t^3 - t^4): the recurrence a_n = 3a_{n-1} - 3a_{n-3} + a_{n-4}
    denom = TruncatedSeries(4, [Fraction(c) for c in (1, -3, 0, 3, -1)])
    inv = denom.inverse()
    assert inv.coeffs == [1, 3, 9, 24, 64]
    assert denom * inv == TruncatedSeries.one(4)


def test_series_inverse_is_two_sided():
    rng = random.Random(3)
    for _ in range(10):
        coeffs = [Fraction(rng.randint(1, 4))] + [
            Fraction(rng.randint(-4, 4)) for _ in range(5)
        ]
        s = TruncatedSeries(5, coeffs)
        assert s * s.inverse() == TruncatedSeries.one(5)
        assert s.inverse() * s == TruncatedSeries.one(5)


def test_singular_constant_term_rejected():
    s = TruncatedSeries(2, [Fraction(0), Fraction(1), Fraction(0)])
    with pytest.raises(ZeroDivisionError):
        s.inverse()


def test_binary_operations_truncate_to_smaller_order():
    a = TruncatedSeries(4, [Fraction(1)] * 5)
    b = TruncatedSeries(2, [Fraction(1)] * 3)
    assert (a * b).order == 2
    assert (a + b).order == 2


# -- Newton's recurrence ----------------------------------------------------


def test_newton_single_variable():
    table = make_table(["s"], [])
    s = table.variable(0)
    es = newton_elementary([s], 1)
    assert es[0] == 1 and es[1] == s


def test_newton_identity_matrix_power_sums():
    # two even eigenvalues both 1: p_n = 2, e_n = binomial(2, n)
    es = newton_elementary([Fraction(2), Fraction(2)], 2)
    assert es == [1, 2, 1]


def test_newton_matches_elementary_symmetric_of_eigenvalues():
    # independent oracle: elementary symmetric polynomials by enumeration
    rng = random.Random(5)
    for _ in range(10):
        eigs = [Fraction(rng.randint(-4, 4), rng.randint(1, 3)) for _ in range(4)]
        K = 4
        power_sums = [sum(x ** n for x in eigs) for n in range(1, K + 1)]
        es = newton_elementary(power_sums, K)
        for n in range(K + 1):
            expected = sum(
                (prod_of(c) for c in combinations(eigs, n)), Fraction(0)
            ) if n else Fraction(1)
            assert es[n] == expected


def prod_of(xs):
    out = Fraction(1)
    for x in xs:
        out *= x
    return out

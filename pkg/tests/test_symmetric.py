from fractions import Fraction
from itertools import permutations

import pytest

from coha.exactpoly import Poly
from coha.symmetric import (
    NotSymmetric,
    TooFewVariables,
    is_block_symmetric,
    monomial_coefficient_profile,
    monomial_symmetric,
    partitions,
    schur,
)

X1, X2, X3 = (Poly.variable((0, k)) for k in (1, 2, 3))
Y1 = Poly.variable((1, 1))


def brute_monomial_symmetric(lam, d):
    """Oracle: enumerate the exponent orbit directly."""
    padded = tuple(lam) + (0,) * (d - len(lam))
    seen = set(permutations(padded))
    total = Poly.zero()
    for exps in seen:
        total = total + Poly.monomial({(0, k + 1): e for k, e in enumerate(exps)})
    return total


def brute_alternant(exponents, d):
    """Oracle: det(x_i^{e_j}) as an explicit signed sum."""
    total = Poly.zero()
    for perm in permutations(range(d)):
        sign = 1
        for i in range(d):
            for j in range(i + 1, d):
                if perm[i] > perm[j]:
                    sign = -sign
        total = total + Poly.monomial(
            {(0, i + 1): exponents[perm[i]] for i in range(d)}, sign
        )
    return total


def test_monomial_symmetric_small():
    assert monomial_symmetric((1, 1), 2) == X1 * X2
    assert monomial_symmetric((2,), 2) == X1 ** 2 + X2 ** 2


def test_monomial_symmetric_21_in_3_vars_brute_force():
    expected = brute_monomial_symmetric((2, 1), 3)
    assert monomial_symmetric((2, 1), 3) == expected
    # six distinct monomials in the orbit
    assert len(monomial_symmetric((2, 1), 3).terms) == 6


def test_monomial_symmetric_needs_enough_variables():
    with pytest.raises(TooFewVariables):
        monomial_symmetric((1, 1, 1), 2)


def test_schur_trivial():
    assert schur((0, 0), 2) == Poly.const(1)
    assert schur((1,), 2) == X1 + X2


def test_schur_21_in_2_vars_brute_force():
    # bialternant oracle: a_{(3,1)} / a_{(1,0)}
    top = brute_alternant((3, 1), 2)
    bottom = brute_alternant((1, 0), 2)
    target = schur((2, 1), 2)
    assert target * bottom == top
    assert target == X1 ** 2 * X2 + X1 * X2 ** 2


def test_schur_homogeneous_and_symmetric():
    for lam in [(2,), (2, 1), (3, 1), (2, 2)]:
        for d in (2, 3):
            if len(lam) > d:
                continue
            s = schur(lam, d)
            assert s.is_homogeneous()
            assert s.degree() == sum(lam)
            assert is_block_symmetric(s, {0: d})


def test_pieri_rule_degree_one():
    for d in (2, 3):
        lhs = schur((1,), d) * schur((1,), d)
        assert lhs == schur((2,), d) + schur((1, 1), d)


def test_is_block_symmetric_examples():
    assert is_block_symmetric(X1 + X2, {0: 2})
    assert not is_block_symmetric(X1 - X2, {0: 2})
    assert is_block_symmetric((Y1 - X1) ** 2, {0: 1, 1: 1})


def test_profile_examples():
    assert monomial_coefficient_profile(X1 * X2, 2) == {(1, 1): 1}
    assert monomial_coefficient_profile(X1 ** 2 + X1 * X2 + X2 ** 2, 2) == {
        (2,): 1,
        (1, 1): 1,
    }
    assert monomial_coefficient_profile(schur((2, 1), 2), 2) == {(2, 1): 1}


def test_profile_roundtrip():
    p = 3 * schur((2, 1), 3) + monomial_symmetric((1, 1, 1), 3) * Fraction(1, 2)
    profile = monomial_coefficient_profile(p, 3)
    rebuilt = Poly.zero()
    for lam, coeff in profile.items():
        rebuilt = rebuilt + monomial_symmetric(lam, 3) * coeff
    assert rebuilt == p


def test_profile_rejects_asymmetric():
    with pytest.raises(NotSymmetric):
        monomial_coefficient_profile(X1 - X2, 2)


def test_partitions_enumeration():
    assert list(partitions(4, max_parts=2)) == [(4,), (3, 1), (2, 2)]
    assert list(partitions(0)) == [()]
    assert len(list(partitions(6, max_parts=3))) == 7


def test_partition_normalization_errors():
    with pytest.raises(ValueError):
        monomial_symmetric((1, 2), 3)  # not weakly decreasing
    with pytest.raises(ValueError):
        monomial_symmetric((-1,), 2)

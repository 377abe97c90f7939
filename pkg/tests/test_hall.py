import random

import pytest

from coha.exactpoly import Poly
from coha.hall import (
    CohaElement,
    NotHomogeneous,
    NotInSpan,
    QuiverMismatch,
    component_basis,
    component_vector,
    coordinates,
    gamma_degree,
    shuffle_product,
    unit,
)
from coha.quiver import builtin_quiver, euler_form
from coha.symmetric import is_block_symmetric, monomial_coefficient_profile, schur

A1, _ = builtin_quiver("a1")
L1, _ = builtin_quiver("l1")
K2, THETA = builtin_quiver("k2")
A20, _ = builtin_quiver("a20tilde")

X1 = Poly.variable((0, 1))
Y1 = Poly.variable((1, 1))


def psi(quiver, k):
    return CohaElement(quiver, (1,), Poly.monomial({(0, 1): k}))


def test_a1_psi_products_match_schur_examples():
    assert shuffle_product(psi(A1, 0), psi(A1, 1)).poly == Poly.const(1)
    assert shuffle_product(psi(A1, 1), psi(A1, 1)).poly.is_zero()


def test_a1_schur_identity_small_grid():
    from itertools import combinations

    for d in (2, 3):
        for ks in combinations(range(5), d):
            lam = tuple(ks[d - 1 - i] - (d - 1 - i) for i in range(d))
            element = psi(A1, ks[0])
            for k in ks[1:]:
                element = shuffle_product(element, psi(A1, k))
            assert element.poly == schur(lam, d), (ks, lam)


def test_a1_anticommutative():
    rng = random.Random(12)
    for _ in range(10):
        poly = Poly.zero()
        for k in range(rng.randint(1, 4)):
            poly = poly + Poly.monomial({(0, 1): rng.randint(0, 5)}, rng.randint(-4, 4))
        f = CohaElement(A1, (1,), poly)
        assert shuffle_product(f, f).poly.is_zero()


def test_l1_products_are_monomial_multiples():
    for lam in [(2, 2), (3, 1), (1, 1, 1)]:
        element = psi(L1, lam[0])
        for k in lam[1:]:
            element = shuffle_product(element, psi(L1, k))
        profile = monomial_coefficient_profile(element.poly, len(lam))
        assert set(profile) == {lam}
        c = profile[lam]
        assert c == int(c) and c > 0


def test_k2_kernel_product():
    one10 = CohaElement(K2, (1, 0), Poly.const(1))
    one01 = CohaElement(K2, (0, 1), Poly.const(1))
    assert shuffle_product(one10, one01).poly == (Y1 - X1) ** 2
    # opposite order has no kernel contribution at all
    assert shuffle_product(one01, one10).poly == Poly.const(1)


def test_a20_single_arrow_kernels():
    one10 = CohaElement(A20, (1, 0), Poly.const(1))
    one01 = CohaElement(A20, (0, 1), Poly.const(1))
    assert shuffle_product(one10, one01).poly == Y1 - X1
    assert shuffle_product(one01, one10).poly == X1 - Y1


def test_unit_element():
    e = CohaElement(K2, (1, 1), X1 ** 2 + Y1)
    for prod in (shuffle_product(unit(K2), e), shuffle_product(e, unit(K2))):
        assert prod.poly == e.poly and prod.dim == (1, 1)


def _random_element(rng, quiver, dim, max_deg=3):
    basis = []
    for m in range(max_deg + 1):
        basis.extend(component_basis(quiver, dim, m))
    poly = Poly.zero()
    for b in rng.sample(basis, min(3, len(basis))):
        poly = poly + b.poly * rng.randint(-3, 3)
    return CohaElement(quiver, dim, poly)


@pytest.mark.parametrize("alias", ["a1", "l1", "k2"])
def test_associativity_randomized(alias):
    quiver, _ = builtin_quiver(alias)
    rng = random.Random(hash(alias) % 1000)
    if quiver.n == 1:
        dims = [(1,), (1,), (1,)], [(1,), (2,), (1,)], [(2,), (1,), (1,)]
    else:
        dims = (
            [(1, 0), (0, 1), (1, 1)],
            [(1, 1), (1, 0), (0, 1)],
            [(1, 0), (1, 0), (0, 2)],
        )
    for dim_triple in dims:
        for _ in range(3):
            a, b, c = (
                _random_element(rng, quiver, d, max_deg=3) for d in dim_triple
            )
            left = shuffle_product(shuffle_product(a, b), c)
            right = shuffle_product(a, shuffle_product(b, c))
            assert left.poly == right.poly


def test_products_block_symmetric():
    rng = random.Random(77)
    for _ in range(5):
        a = _random_element(rng, K2, (1, 1))
        b = _random_element(rng, K2, (1, 1))
        prod = shuffle_product(a, b)
        assert is_block_symmetric(prod.poly, dict(enumerate(prod.dim)))


def test_gamma_degree_examples():
    assert gamma_degree(psi(A1, 2)) == ((1,), 5)
    assert gamma_degree(psi(L1, 2)) == ((1,), 4)
    e0 = CohaElement(K2, (1, 1), Poly.const(1))
    assert gamma_degree(e0) == ((1, 1), 0)
    with pytest.raises(NotHomogeneous):
        gamma_degree(CohaElement(A1, (1,), Poly.const(1) + X1))


@pytest.mark.parametrize("alias", ["a1", "l1", "a20tilde"])
def test_gamma_degree_additive_on_symmetric_quivers(alias):
    quiver, _ = builtin_quiver(alias)
    rng = random.Random(len(alias))
    if quiver.n == 1:
        pairs = [((1,), (1,)), ((1,), (2,))]
    else:
        pairs = [((1, 0), (0, 1)), ((1, 1), (1, 0)), ((1, 1), (1, 1))]
    for d1, d2 in pairs:
        for m1 in range(2):
            for m2 in range(2):
                b1 = component_basis(quiver, d1, m1)
                b2 = component_basis(quiver, d2, m2)
                if not b1 or not b2:
                    continue
                f, g = rng.choice(b1), rng.choice(b2)
                prod = shuffle_product(f, g)
                if prod.poly.is_zero():
                    continue
                assert (
                    gamma_degree(prod).coh
                    == gamma_degree(f).coh + gamma_degree(g).coh
                )


def test_gamma_degree_additive_central_slope_k2():
    e1 = CohaElement(K2, (1, 1), X1)
    f2 = CohaElement(K2, (1, 1), X1 * (Y1 - X1))
    prod = shuffle_product(e1, f2)
    assert gamma_degree(prod).coh == gamma_degree(e1).coh + gamma_degree(f2).coh


def test_component_basis_examples():
    basis = component_basis(K2, (1, 1), 1)
    assert [b.render() for b in basis] == ["x1", "y1"]
    basis = component_basis(K2, (1, 1), 2)
    assert [b.render() for b in basis] == ["x1^2", "x1*y1", "y1^2"]
    basis = component_basis(A1, (2,), 2)
    assert [b.render() for b in basis] == ["x1^2 + x2^2", "x1*x2"]


def test_component_vector_matches_coordinates():
    e = CohaElement(K2, (1, 1), (Y1 - X1) ** 2)
    assert component_vector(e, 2) == [1, -2, 1]


def test_coordinates_examples():
    basis = component_basis(K2, (1, 1), 2)
    e = CohaElement(K2, (1, 1), (Y1 - X1) ** 2)
    assert coordinates(e, basis) == (1, -2, 1)
    zero = CohaElement(K2, (1, 1), Poly.zero())
    assert coordinates(zero, basis) == (0, 0, 0)
    cubic = CohaElement(K2, (1, 1), X1 ** 3)
    with pytest.raises(NotInSpan):
        coordinates(cubic, basis)


def test_quiver_mismatch():
    with pytest.raises(QuiverMismatch):
        shuffle_product(psi(A1, 0), psi(L1, 0))


def test_element_validation():
    with pytest.raises(ValueError):
        CohaElement(K2, (1, 0), Y1)  # y-block empty at dim (1,0)
    with pytest.raises(ValueError):
        CohaElement(K2, (1, 1), Poly.variable((0, 0)))  # slots start at 1


def test_kernel_degree_shift_matches_euler_form():
    # deg(f*g) = deg f + deg g - <d1, d2> on nonvanishing products
    rng = random.Random(31)
    for d1, d2 in [((1, 0), (0, 1)), ((1, 1), (1, 1)), ((2, 0), (0, 1))]:
        f = rng.choice(component_basis(K2, d1, 1)) if component_basis(K2, d1, 1) else None
        g = rng.choice(component_basis(K2, d2, 1)) if component_basis(K2, d2, 1) else None
        if f is None or g is None:
            continue
        prod = shuffle_product(f, g)
        if prod.poly.is_zero():
            continue
        assert prod.degree() == 2 - euler_form(K2, d1, d2)

"""Graded Hall-algebra components and the shuffle product with kernel.

An element of the algebra attached to a quiver Q in dimension d is a
polynomial in blocks of variables x_{i,1..d_i}, one block per vertex,
symmetric within each block.  The product of elements of dimensions d' and
d'' is a sum over tuples of per-vertex (d'_i, d''_i)-shuffles: the factors
are substituted along the shuffle and multiplied by the kernel

    prod_{i,j} prod_{k <= d'_i} prod_{l <= d''_j}
        (x_{j, s_j(d'_j + l)} - x_{i, s_i(k)}) ^ (-<e_i, e_j>),

where <,> is the Euler form.  Negative exponents are handled by putting
every term over one common denominator (the full cross product of the
relevant linear factors) and dividing exactly at the end; the quotient is
always a polynomial.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations, product
from typing import NamedTuple, Sequence

from .exactpoly import NotDivisible, Poly, exact_div, poly_sum, render_poly, rename_vars
from .linalg import solve_in_span
from .quiver import Quiver, euler_form
from .symmetric import is_block_symmetric, monomial_symmetric, partitions


#: when set (the test suite turns it on), every shuffle product asserts
#: that its output is block-symmetric
VALIDATE_PRODUCTS = False


class QuiverMismatch(ValueError):
    """Operands live over different quivers."""


class NotHomogeneous(ValueError):
    """Operation requires a homogeneous polynomial."""


class NotInSpan(ValueError):
    """Element is not a combination of the given basis."""


class InternalNotDivisible(RuntimeError):
    """A shuffle sum failed its exact division; indicates an internal bug."""


@dataclass(frozen=True)
class CohaElement:
    """A dimension-d component element: block-symmetric polynomial data."""

    quiver: Quiver
    dim: tuple
    poly: Poly

    def __post_init__(self):
        object.__setattr__(self, "dim", self.quiver.check_dim(self.dim))
        for vert, slot in self.poly.vars:
            if not (0 <= vert < self.quiver.n) or not (1 <= slot <= self.dim[vert]):
                raise ValueError(
                    f"variable block ({vert},{slot}) outside dimension vector {self.dim}"
                )

    def degree(self) -> int:
        return self.poly.degree()

    def is_block_symmetric(self) -> bool:
        return is_block_symmetric(self.poly, dict(enumerate(self.dim)))

    def __mul__(self, other) -> "CohaElement":
        if isinstance(other, CohaElement):
            return shuffle_product(self, other)
        return CohaElement(self.quiver, self.dim, self.poly * other)

    def __rmul__(self, other) -> "CohaElement":
        return CohaElement(self.quiver, self.dim, self.poly * other)

    def __add__(self, other) -> "CohaElement":
        self._check_compatible(other)
        return CohaElement(self.quiver, self.dim, self.poly + other.poly)

    def __sub__(self, other) -> "CohaElement":
        self._check_compatible(other)
        return CohaElement(self.quiver, self.dim, self.poly - other.poly)

    def _check_compatible(self, other):
        if self.quiver != other.quiver:
            raise QuiverMismatch("elements over different quivers")
        if self.dim != other.dim:
            raise ValueError(f"dimension mismatch {self.dim} vs {other.dim}")

    def render(self) -> str:
        return render_poly(self.poly)


def unit(q: Quiver) -> CohaElement:
    return CohaElement(q, (0,) * q.n, Poly.const(1))


class GammaDegree(NamedTuple):
    dim: tuple
    coh: int


def gamma_degree(e: CohaElement) -> GammaDegree:
    """(dim, 2*poly degree + <d,d>); requires a homogeneous polynomial."""
    if not e.poly.is_homogeneous():
        raise NotHomogeneous(e.render())
    m = max(e.poly.degree(), 0)
    self_pairing = euler_form(e.quiver, e.dim, e.dim)
    return GammaDegree(e.dim, 2 * m + self_pairing)


def _linear_factor(high, low) -> Poly:
    """x_high - x_low for two (vertex, slot) variables."""
    return Poly.variable(high) - Poly.variable(low)


class _ShuffleTerm(NamedTuple):
    f_map: dict
    g_map: dict
    cofactor: Poly


class _ShufflePlan(NamedTuple):
    dim: tuple
    terms: tuple
    denominators: tuple


@lru_cache(maxsize=None)
def _shuffle_plan(q: Quiver, d1: tuple, d2: tuple) -> _ShufflePlan:
    n = q.n
    dim = tuple(a + b for a, b in zip(d1, d2))
    mat = q.euler_matrix()

    # the common denominator, kept factored: dividing by one linear factor
    # at a time is much cheaper than by the expanded product
    denominators = []
    for i in range(n):
        for j in range(n):
            c = mat[i][j]
            if c <= 0:
                continue
            if i == j:
                for a, b in combinations(range(1, dim[i] + 1), 2):
                    denominators.extend([_linear_factor((i, b), (i, a))] * c)
            else:
                for a in range(1, dim[i] + 1):
                    for b in range(1, dim[j] + 1):
                        denominators.extend([_linear_factor((j, b), (i, a))] * c)

    per_vertex = [combinations(range(1, dim[v] + 1), d1[v]) for v in range(n)]
    terms = []
    for f_slots in product(*per_vertex):
        g_slots = tuple(
            tuple(s for s in range(1, dim[v] + 1) if s not in set(f_slots[v]))
            for v in range(n)
        )
        f_map = {
            (v, k): (v, f_slots[v][k - 1])
            for v in range(n)
            for k in range(1, d1[v] + 1)
        }
        g_map = {
            (v, l): (v, g_slots[v][l - 1])
            for v in range(n)
            for l in range(1, d2[v] + 1)
        }
        cofactor = Poly.const(1)
        sign = 1
        for i in range(n):
            for j in range(n):
                c = mat[i][j]
                if c == 0:
                    continue
                if c < 0:
                    for a in f_slots[i]:
                        for b in g_slots[j]:
                            cofactor = cofactor * _linear_factor((j, b), (i, a)) ** (-c)
                elif i == j:
                    split = {frozenset((a, b)) for a in f_slots[i] for b in g_slots[i]}
                    n_neg = sum(1 for a in f_slots[i] for b in g_slots[i] if b < a)
                    if (c * n_neg) % 2:
                        sign = -sign
                    for a, b in combinations(range(1, dim[i] + 1), 2):
                        if frozenset((a, b)) not in split:
                            cofactor = cofactor * _linear_factor((i, b), (i, a)) ** c
                else:
                    covered = set(product(f_slots[i], g_slots[j]))
                    for a in range(1, dim[i] + 1):
                        for b in range(1, dim[j] + 1):
                            if (a, b) not in covered:
                                cofactor = cofactor * _linear_factor((j, b), (i, a)) ** c
        terms.append(_ShuffleTerm(f_map, g_map, cofactor * sign))
    return _ShufflePlan(dim, tuple(terms), tuple(denominators))


def shuffle_product(f: CohaElement, g: CohaElement) -> CohaElement:
    """Kontsevich-Soibelman shuffle product with kernel."""
    if f.quiver != g.quiver:
        raise QuiverMismatch("shuffle product requires a common quiver")
    plan = _shuffle_plan(f.quiver, f.dim, g.dim)
    pieces = []
    for term in plan.terms:
        piece = rename_vars(f.poly, term.f_map) * rename_vars(g.poly, term.g_map)
        pieces.append(piece * term.cofactor)
    result = poly_sum(pieces)
    try:
        for factor in plan.denominators:
            result = exact_div(result, factor)
    except NotDivisible as exc:
        raise InternalNotDivisible(
            f"shuffle sum for dims {f.dim} * {g.dim} not divisible: {exc}"
        ) from exc
    element = CohaElement(f.quiver, plan.dim, result)
    if VALIDATE_PRODUCTS:
        assert element.is_block_symmetric(), "shuffle output lost block symmetry"
    return element


@lru_cache(maxsize=None)
def component_basis(q: Quiver, d: tuple, m: int) -> tuple:
    """Basis of the degree-m part: products of per-vertex monomial symmetrics.

    Ordered by the leading monomial, descending graded-lex, so the layout is
    stable across runs.
    """
    d = q.check_dim(d)
    if m < 0:
        return ()
    choices = []

    def splits(v, remaining):
        if v == q.n:
            if remaining == 0:
                yield ()
            return
        for take in range(remaining, -1, -1):
            for lam in partitions(take, max_parts=d[v]):
                for rest in splits(v + 1, remaining - take):
                    yield (lam,) + rest

    for lam_tuple in splits(0, m):
        poly = Poly.const(1)
        for v, lam in enumerate(lam_tuple):
            poly = poly * monomial_symmetric(lam, d[v], vertex=v)
        choices.append((_leading_exponents(lam_tuple, d), lam_tuple, poly))
    choices.sort(key=lambda item: item[0], reverse=True)
    return tuple(
        CohaElement(q, d, poly) for _, _, poly in choices
    )


def _leading_exponents(lam_tuple, d) -> tuple:
    exps = []
    for v, lam in enumerate(lam_tuple):
        padded = tuple(lam) + (0,) * (d[v] - len(lam))
        exps.extend(padded)
    return (sum(exps), tuple(exps))


@lru_cache(maxsize=None)
def _basis_profiles(q: Quiver, d: tuple, m: int) -> tuple:
    """Representative monomial (as a var->exp map) for each basis element."""
    profiles = []
    for element in component_basis(q, d, m):
        mono, _ = element.poly.sorted_terms()[0] if element.poly.terms else ((), None)
        profiles.append({v: e for v, e in zip(element.poly.vars, mono) if e})
    return tuple(profiles)


def component_vector(e: CohaElement, m: int) -> list:
    """Coordinates of a degree-m element over component_basis, in order."""
    profiles = _basis_profiles(e.quiver, e.dim, m)
    return [e.poly.coefficient(profile) for profile in profiles]


def coordinates(e: CohaElement, basis: Sequence[CohaElement]) -> tuple:
    """Coordinates of e in an explicit basis; NotInSpan when impossible."""
    # express everything over a shared monomial support
    support = []
    seen = set()
    for p in [b.poly for b in basis] + [e.poly]:
        for exps, _ in p.monomials():
            key = tuple(sorted(exps.items()))
            if key not in seen:
                seen.add(key)
                support.append(key)
    support.sort()
    index = {key: i for i, key in enumerate(support)}

    def vec(p: Poly):
        out = [Fraction(0)] * len(support)
        for exps, c in p.monomials():
            out[index[tuple(sorted(exps.items()))]] = c
        return out

    solution = solve_in_span([vec(b.poly) for b in basis], vec(e.poly))
    if solution is None:
        raise NotInSpan(e.render())
    return tuple(solution)

"""Semistable components via the tautological presentation.

The unstable subspace of a component (d, m) is the span of all shuffle
products H_{d'} * H_{d''} landing there, over decompositions d = d' + d''
with slope(d') > slope(d'').  Quotient dimensions, canonical
representatives, projection modulo the subspace, and the degreewise
Harder-Narasimhan factorization check are built on top of it.

Row reduction runs with columns in reversed basis order, so pivots land on
the lex-small monomials and the surviving representatives are the leading
ones (1, x, x^2, ... rather than the top powers of the last block).
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from itertools import product

from .hall import (
    CohaElement,
    NotHomogeneous,
    component_basis,
    component_vector,
    shuffle_product,
)
from .linalg import RowSpace
from .quiver import Quiver, ZeroDimVector, euler_form, hn_types, slope, _sub_vectors


@dataclass(frozen=True)
class GradedSubspace:
    """Echelonized subspace of one graded component."""

    quiver: Quiver
    theta: tuple
    dim: tuple
    degree: int
    basis: tuple = field(compare=False)
    space: RowSpace = field(compare=False)

    @property
    def dimension(self) -> int:
        return self.space.rank

    def ambient_dimension(self) -> int:
        return len(self.basis)

    def rep_indices(self) -> tuple:
        """Canonical-order indices of the surviving quotient representatives."""
        width = len(self.basis)
        pivot_cols = {width - 1 - p for p in self.space.pivots}
        return tuple(i for i in range(width) if i not in pivot_cols)

    def reduce_vector(self, vec) -> list:
        """Canonical residual of a coordinate vector modulo the subspace."""
        residual = self.space.reduce(list(reversed(list(vec))))
        return list(reversed(residual))

    def contains(self, vec) -> bool:
        return not any(self.reduce_vector(vec))

    def membership_certificate(self, vec):
        """Coefficients over the echelon rows, or None if vec is outside."""
        return self.space.coords(list(reversed(list(vec))))

    def reduced_rows(self) -> list:
        """Rows of the reduced echelon basis, in canonical column order."""
        return [list(reversed(row)) for row in self.space.reduced_rows()]


def _admissible_decompositions(theta, d):
    """(d', d'') pairs with both parts nonzero and slope(d') > slope(d'')."""
    out = []
    for head in _sub_vectors(d):
        tail = tuple(r - h for r, h in zip(d, head))
        if not any(tail):
            continue
        if slope(theta, head) > slope(theta, tail):
            out.append((head, tail))
    return out


@lru_cache(maxsize=None)
def unstable_subspace(q: Quiver, theta: tuple, d: tuple, m: int) -> GradedSubspace:
    """Echelon span of products of higher-slope times lower-slope pieces."""
    theta = tuple(theta)
    d = q.check_dim(d)
    basis = component_basis(q, d, m)
    space = RowSpace(len(basis))
    for head, tail in _admissible_decompositions(theta, d):
        shift = -euler_form(q, head, tail)
        budget = m - shift
        if budget < 0:
            continue
        for m1 in range(budget + 1):
            m2 = budget - m1
            for f in component_basis(q, head, m1):
                for g in component_basis(q, tail, m2):
                    prod = shuffle_product(f, g)
                    space.insert(list(reversed(component_vector(prod, m))))
    return GradedSubspace(q, theta, d, m, basis, space)


def sst_quotient(q: Quiver, theta, d, m: int):
    """(dimension, representatives) of the semistable quotient in degree m."""
    sub = unstable_subspace(q, tuple(theta), tuple(d), m)
    reps = tuple(sub.basis[i] for i in sub.rep_indices())
    return sub.ambient_dimension() - sub.dimension, reps


def project(e: CohaElement, theta, degree: int | None = None):
    """Coordinates of e's class over the quotient representatives."""
    if degree is None:
        if not e.poly.is_homogeneous():
            raise NotHomogeneous(e.render())
        degree = max(e.poly.degree(), 0)
    sub = unstable_subspace(e.quiver, tuple(theta), e.dim, degree)
    residual = sub.reduce_vector(component_vector(e, degree))
    return tuple(residual[i] for i in sub.rep_indices())


def _stratum_dimension(q: Quiver, theta, parts, m: int) -> int:
    """Dimension of the span of products of semistable representatives.

    Degrees are distributed so the left-to-right shuffle products land in
    total degree m; the pairwise kernel shifts are dictated by the product.
    """
    if len(parts) == 1:
        return sst_quotient(q, theta, parts[0], m)[0]
    shift = -sum(
        euler_form(q, parts[a], parts[b])
        for a in range(len(parts))
        for b in range(a + 1, len(parts))
    )
    budget = m - shift
    if budget < 0:
        return 0
    total_dim = tuple(sum(col) for col in zip(*parts))
    space = RowSpace(len(component_basis(q, total_dim, m)))
    for degrees in _compositions(budget, len(parts)):
        rep_lists = [
            sst_quotient(q, theta, part, deg)[1] for part, deg in zip(parts, degrees)
        ]
        if any(not reps for reps in rep_lists):
            continue
        for combo in product(*rep_lists):
            element = combo[0]
            for factor in combo[1:]:
                element = shuffle_product(element, factor)
            space.insert(component_vector(element, m))
    return space.rank


def _compositions(total: int, parts: int):
    if parts == 1:
        yield (total,)
        return
    for first in range(total + 1):
        for rest in _compositions(total - first, parts - 1):
            yield (first,) + rest


def hn_dim_check(q: Quiver, theta, d, m_max: int) -> list:
    """Compare component dimensions against the HN strata, degree by degree."""
    theta = tuple(theta)
    d = q.check_dim(d)
    if not any(d):
        raise ZeroDimVector("HN check needs a nonzero dimension vector")
    types = hn_types(theta, d)
    rows = []
    for m in range(m_max + 1):
        total = len(component_basis(q, d, m))
        strata_sum = sum(_stratum_dimension(q, theta, t, m) for t in types)
        rows.append(
            {
                "dim_vector": list(d),
                "degree": m,
                "total": total,
                "strata_sum": strata_sum,
                "pass": total == strata_sum,
            }
        )
    return rows


# -- graded symmetric-algebra dimension oracles -----------------------------


def sym_series_dim(generators, d, coh: int) -> int:
    """Graded dimension of Sym*(V ⊗ Q[z]) at bidegree (d, coh).

    `generators` lists (dimension vector, starting cohomological degree)
    families; z has degree (0, 2).  Families of odd cohomological degree
    contribute exterior factors, even ones polynomial factors, matching the
    sign rules of a graded symmetric algebra.
    """
    d = tuple(d)
    if coh < 0:
        return 0
    zero = tuple([0] * len(d))
    states = {(zero, 0): 1}

    def fits(dim, c):
        return c <= coh and all(a <= b for a, b in zip(dim, d))

    for delta, base in generators:
        delta = tuple(delta)
        if not any(delta):
            raise ValueError("generator families need a nonzero dimension vector")
        k = 0
        while base + 2 * k <= coh:
            c0 = base + 2 * k
            if base % 2:
                updated = dict(states)
                for (dim, c), count in states.items():
                    ndim = tuple(a + b for a, b in zip(dim, delta))
                    if fits(ndim, c + c0):
                        key = (ndim, c + c0)
                        updated[key] = updated.get(key, 0) + count
                states = updated
            else:
                # unbounded multiplicity: coin-change sweep, dims ascending
                dims = sorted(
                    product(*[range(x + 1) for x in d]), key=lambda t: (sum(t), t)
                )
                for dim in dims:
                    prev_dim = tuple(a - b for a, b in zip(dim, delta))
                    if any(x < 0 for x in prev_dim):
                        continue
                    for c in range(c0, coh + 1):
                        prev = states.get((prev_dim, c - c0))
                        if prev:
                            key = (dim, c)
                            states[key] = states.get(key, 0) + prev
            k += 1
    return states.get((d, coh), 0)


def exterior_prediction(q: Quiver, delta, r: int, m: int) -> int:
    """Predicted semistable dimension at d = r*delta, polynomial degree m,

    from the exterior algebra on one odd generator family in dimension delta.
    """
    delta = tuple(delta)
    d = tuple(r * x for x in delta)
    coh = 2 * m + euler_form(q, d, d)
    return sym_series_dim([(delta, 1)], d, coh)

"""Partitions and symmetric-function oracles.

Monomial symmetric polynomials, Schur polynomials via the bialternant
ratio, block-symmetry tests, and expansion of a symmetric polynomial in
the monomial basis.  These serve as independent ground truth for the
Hall-algebra product identities elsewhere in the package.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import permutations
from typing import Iterator, Mapping

from .exactpoly import Poly, exact_div, permute_slots


class TooFewVariables(ValueError):
    """Partition has more nonzero parts than there are variables."""


class NotSymmetric(ValueError):
    """Input polynomial is not symmetric in the expected variables."""


def normalize_partition(parts) -> tuple:
    """Weakly decreasing tuple with trailing zeros removed."""
    parts = tuple(int(p) for p in parts)
    if any(p < 0 for p in parts):
        raise ValueError("partition parts must be nonnegative")
    if list(parts) != sorted(parts, reverse=True):
        raise ValueError(f"{parts} is not weakly decreasing")
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def partitions(n: int, max_parts: int | None = None, max_part: int | None = None) -> Iterator[tuple]:
    """All partitions of n, largest part first, in descending lex order."""
    if max_part is None:
        max_part = n
    if max_parts is None:
        max_parts = n
    if n == 0:
        yield ()
        return
    if max_parts == 0 or max_part == 0:
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, max_parts - 1, first):
            yield (first,) + rest


@lru_cache(maxsize=None)
def _monomial_symmetric_cached(lam: tuple, d: int, vertex: int) -> Poly:
    padded = lam + (0,) * (d - len(lam))
    seen = set()
    terms = {}
    for exps in permutations(padded):
        if exps in seen:
            continue
        seen.add(exps)
        key = tuple(e for e in exps)
        terms[key] = Fraction(1)
    vars = tuple((vertex, k) for k in range(1, d + 1))
    return Poly(vars, terms)


def monomial_symmetric(lam, d: int, vertex: int = 0) -> Poly:
    """m_lam in d variables: the sum of the orbit of x^lam."""
    lam = normalize_partition(lam)
    if len(lam) > d:
        raise TooFewVariables(f"partition {lam} needs more than {d} variables")
    return _monomial_symmetric_cached(lam, d, vertex)


@lru_cache(maxsize=None)
def _alternant(exponents: tuple, d: int, vertex: int) -> Poly:
    """det(x_i^{e_j}) expanded as a signed permutation sum."""
    terms = {}
    for perm in permutations(range(d)):
        sign = 1
        seen = list(perm)
        # parity by counting inversions
        inversions = sum(
            1 for i in range(d) for j in range(i + 1, d) if seen[i] > seen[j]
        )
        sign = -1 if inversions % 2 else 1
        key = [0] * d
        for row, col in enumerate(perm):
            key[row] = exponents[col]
        key = tuple(key)
        terms[key] = terms.get(key, 0) + sign
    vars = tuple((vertex, k) for k in range(1, d + 1))
    return Poly(vars, {k: Fraction(c) for k, c in terms.items() if c})


def schur(lam, d: int, vertex: int = 0) -> Poly:
    """Schur polynomial s_lam(x_1..x_d) via the bialternant ratio.

    The division is exact by construction, which doubles as a consistency
    check on the alternants.
    """
    lam = normalize_partition(lam)
    if len(lam) > d:
        raise TooFewVariables(f"partition {lam} needs more than {d} variables")
    if d == 0:
        return Poly.const(1)
    padded = lam + (0,) * (d - len(lam))
    delta = tuple(d - 1 - i for i in range(d))
    top = _alternant(tuple(p + s for p, s in zip(padded, delta)), d, vertex)
    bottom = _alternant(delta, d, vertex)
    return exact_div(top, bottom)


def is_block_symmetric(p: Poly, blocks: Mapping[int, int]) -> bool:
    """True iff p is invariant under adjacent slot swaps within each block."""
    for vert, size in blocks.items():
        for s in range(1, size):
            images = list(range(1, size + 1))
            images[s - 1], images[s] = images[s], images[s - 1]
            if permute_slots(p, {vert: images}) != p:
                return False
    return True


def monomial_coefficient_profile(p: Poly, d: int) -> dict:
    """Expand a symmetric polynomial in the monomial basis.

    Returns {partition: coefficient}; raises NotSymmetric when p is not
    symmetric in its (single-block) d variables.
    """
    if p.is_zero():
        return {}
    verts = {v for v, _ in p.vars}
    if len(verts) > 1:
        raise NotSymmetric("profile expects a single variable block")
    vertex = verts.pop() if verts else 0
    if any(slot > d for _, slot in p.vars):
        raise NotSymmetric(f"polynomial uses more than {d} variables")
    if not is_block_symmetric(p, {vertex: d}):
        raise NotSymmetric("polynomial is not symmetric")
    profile = {}
    rest = p
    while not rest.is_zero():
        mono, coeff = rest.sorted_terms()[0]
        lam = normalize_partition(tuple(sorted(mono, reverse=True)))
        profile[lam] = coeff
        rest = rest - monomial_symmetric(lam, d, vertex) * coeff
    return profile

"""Exact row spaces over the rationals.

Rows are kept as primitive integer vectors in (non-reduced) echelon form:
each row's first nonzero entry sits at its pivot column, pivots strictly
increase, and reduction of a vector against the rows is canonical.  The
fully reduced rational form is materialized only on demand.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Sequence


def _to_int_vector(vec: Sequence):
    """(integer vector, positive denominator) equal to vec / denominator."""
    denom = 1
    for x in vec:
        if isinstance(x, Fraction):
            denom = denom * x.denominator // gcd(denom, x.denominator)
    out = []
    for x in vec:
        if isinstance(x, Fraction):
            out.append(int(x * denom))
        else:
            out.append(int(x) * denom)
    return out, denom


def _primitive(vec: list) -> list:
    g = 0
    for x in vec:
        g = gcd(g, x)
        if g == 1:
            break
    if g > 1:
        vec = [x // g for x in vec]
    for x in vec:
        if x:
            return vec if x > 0 else [-y for y in vec]
    return vec


class RowSpace:
    """Span of inserted vectors with exact membership and reduction."""

    def __init__(self, width: int):
        self.width = width
        self.rows: list[list[int]] = []
        self.pivots: list[int] = []

    @property
    def rank(self) -> int:
        return len(self.rows)

    def _forward(self, vec: Sequence):
        """Eliminate all pivot columns; returns (scaled residual, scale)."""
        v, denom = _to_int_vector(vec)
        scale = denom
        for row, p in zip(self.rows, self.pivots):
            c = v[p]
            if not c:
                continue
            rp = row[p]
            v = [rp * a - c * b for a, b in zip(v, row)]
            scale *= rp
            # keep numbers small: strip a common factor when one exists
            g = 0
            for x in v:
                g = gcd(g, x)
                if g == 1:
                    break
            g = gcd(g, scale) if g else scale
            if g > 1:
                v = [x // g for x in v]
                scale //= g
        return v, scale

    def insert(self, vec: Sequence) -> bool:
        """Add a vector to the span; True when the rank grew."""
        if len(vec) != self.width:
            raise ValueError("vector width mismatch")
        v, _ = self._forward(vec)
        v = _primitive(v)
        for p, x in enumerate(v):
            if x:
                at = 0
                while at < len(self.pivots) and self.pivots[at] < p:
                    at += 1
                self.rows.insert(at, v)
                self.pivots.insert(at, p)
                return True
        return False

    def extend(self, vectors) -> None:
        for vec in vectors:
            self.insert(vec)

    def reduce(self, vec: Sequence) -> list:
        """Canonical residual of vec modulo the row span (exact)."""
        if len(vec) != self.width:
            raise ValueError("vector width mismatch")
        v, scale = self._forward(vec)
        return [Fraction(x, scale) for x in v]

    def contains(self, vec: Sequence) -> bool:
        return not any(self.reduce(vec))

    def coords(self, vec: Sequence):
        """Coefficients of vec over the stored rows, or None if outside.

        The rows themselves are the (primitive integer) echelon rows, so
        this is a certificate of membership rather than a change of basis.
        """
        v = [x if isinstance(x, Fraction) else Fraction(x) for x in vec]
        coeffs = []
        for row, p in zip(self.rows, self.pivots):
            c = v[p] / row[p]
            coeffs.append(c)
            if c:
                v = [a - c * b for a, b in zip(v, row)]
        if any(v):
            return None
        return coeffs

    def reduced_rows(self) -> list:
        """Reduced row echelon form over Q (pivots 1, zeros above pivots)."""
        rows = [[Fraction(x) for x in row] for row in self.rows]
        for r in range(len(rows) - 1, -1, -1):
            p = self.pivots[r]
            pivot_val = rows[r][p]
            rows[r] = [x / pivot_val for x in rows[r]]
            for above in range(r):
                c = rows[above][p]
                if c:
                    rows[above] = [a - c * b for a, b in zip(rows[above], rows[r])]
        return rows


def rank_of(vectors, width: int | None = None) -> int:
    vectors = list(vectors)
    if width is None:
        width = len(vectors[0]) if vectors else 0
    space = RowSpace(width)
    space.extend(vectors)
    return space.rank


def solve_in_span(vectors, target):
    """Coefficients x with sum x_i vectors[i] = target, or None.

    When the vectors are dependent an arbitrary but deterministic solution
    is returned.
    """
    vectors = [list(v) for v in vectors]
    target = list(target)
    width = len(target)
    if any(len(v) != width for v in vectors):
        raise ValueError("vector width mismatch")
    n = len(vectors)
    space = RowSpace(width + n)
    for i, v in enumerate(vectors):
        tail = [0] * n
        tail[i] = 1
        space.insert(list(v) + tail)
    v = [x if isinstance(x, Fraction) else Fraction(x) for x in target] + [Fraction(0)] * n
    for row, p in zip(space.rows, space.pivots):
        if p >= width:
            break
        c = v[p] / row[p]
        if c:
            v = [a - c * b for a, b in zip(v, row)]
    if any(v[:width]):
        return None
    return [-x for x in v[width:]]

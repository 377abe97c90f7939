"""Representation of the central-slope algebra on B = Q[w_1, w_2, ...].

f_n acts as multiplication by w_n.  e_p acts as the derivation whose value
on generators is the X^p Y^q coefficient of

    (Y - X) * (sum_{i,j} w_{i+j+1} X^i Y^j)^2,

the square taken in B.  The displayed closed form for e_i w_{j+1} is read
off from this series rather than transcribed.  Operator words act by
composition, rightmost letter first; relation checks evaluate both sides
on 1 (for multiplication identities) or on the generators w_r (for the
derivation identity), and the faithfulness probe assembles evaluation
matrices of standard monomials over a finite probe set.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from itertools import combinations_with_replacement

from .exactpoly import Poly
from .kronecker import (
    GenIndex,
    IndexConstraintViolated,
    render_word,
    standard_monomials,
)
from .linalg import RowSpace

#: w_n is the slot-n variable of the single block used for B
W_VERTEX = 0


def w(n: int) -> Poly:
    if n < 1:
        raise ValueError("w-variables are indexed from 1")
    return Poly.variable((W_VERTEX, n))


def f_act(n: int, p: Poly) -> Poly:
    """Multiplication by w_n."""
    if n < 1:
        raise ValueError("f-operators are indexed from 1")
    return w(n) * p


def _pair_sum(a: int, b: int) -> Poly:
    """sum over i+k=a, j+l=b of w_{i+j+1} w_{k+l+1} (zero off the grid)."""
    if a < 0 or b < 0:
        return Poly.zero()
    total = Poly.zero()
    for i in range(a + 1):
        k = a - i
        for j in range(b + 1):
            l = b - j
            total = total + w(i + j + 1) * w(k + l + 1)
    return total


@lru_cache(maxsize=None)
def e_on_generator(p: int, q: int) -> Poly:
    """e_p(w_{q+1}), extracted from the generating series."""
    if p < 0 or q < 0:
        raise ValueError("indices must be nonnegative")
    return _pair_sum(p, q - 1) - _pair_sum(p - 1, q)


def e_act(p: int, poly: Poly) -> Poly:
    """Derivation extension of e_on_generator via the Leibniz rule."""
    if p < 0:
        raise ValueError("e-operators are indexed from 0")
    total = Poly.zero()
    for exps, coeff in poly.monomials():
        for (vert, slot), e in exps.items():
            rest = dict(exps)
            rest[(vert, slot)] = e - 1
            total = total + (
                Poly.monomial(rest, coeff * e) * e_on_generator(p, slot - 1)
            )
    return total


def apply_letter(g: GenIndex, poly: Poly) -> Poly:
    return e_act(g.n, poly) if g.kind == "e" else f_act(g.n, poly)


def apply_word(word, poly: Poly) -> Poly:
    """Operator word action: rightmost letter acts first."""
    for g in reversed(tuple(word)):
        poly = apply_letter(g, poly)
    return poly


def operator_relation_check(kind: str, p: int, q: int, probe: int = 6) -> dict:
    """Verify a defining relation as an identity of operators on B.

    FF and EF sides are multiplication operators, determined by their value
    on 1; the EE commutator is a derivation, checked on w_1..w_probe.
    """
    if p < 0 or q < 0:
        raise IndexConstraintViolated("indices must be nonnegative")
    if kind == "FF":
        if not p < q:
            raise IndexConstraintViolated("FF needs p < q")
        one = Poly.const(1)
        lhs = f_act(p + 1, f_act(q + 1, one)) - f_act(q + 1, f_act(p + 1, one))
        ok = lhs.is_zero()
        return {"kind": kind, "p": p, "q": q, "probe": 1, "pass": ok}
    if kind in ("EF_lt", "EF_gt"):
        if kind == "EF_lt" and not p < q:
            raise IndexConstraintViolated("EF_lt needs p < q")
        if kind == "EF_gt" and not p > q:
            raise IndexConstraintViolated("EF_gt needs p > q")
        one = Poly.const(1)
        lhs = e_act(p, f_act(q + 1, one)) - f_act(q + 1, e_act(p, one))
        rhs = Poly.zero()
        if kind == "EF_lt":
            for t in range(q - p):
                rhs = rhs + f_act(p + 1 + t, f_act(q - t, one))
        else:
            for t in range(p - q):
                rhs = rhs - f_act(q + 1 + t, f_act(p - t, one))
        return {"kind": kind, "p": p, "q": q, "probe": 1, "pass": lhs == rhs}
    if kind == "EE":
        if not p < q:
            raise IndexConstraintViolated("EE needs p < q")
        ok = True
        for r in range(1, probe + 1):
            target = w(r)
            lhs = e_act(p, e_act(q, target)) - e_act(q, e_act(p, target))
            rhs = Poly.zero()
            for j in range(q - p):
                rhs = rhs + e_act(p + j, f_act(q - j, target)) * 2
            if lhs != rhs:
                ok = False
                break
        return {"kind": kind, "p": p, "q": q, "probe": probe, "pass": ok}
    raise IndexConstraintViolated(f"unknown relation kind {kind!r}")


def operator_relation_grid(p_max: int, q_max: int, probe: int = 6) -> list:
    rows = []
    for kind in ("EE", "EF_lt", "EF_gt", "FF"):
        for p in range(p_max + 1):
            for q in range(q_max + 1):
                try:
                    rows.append(operator_relation_check(kind, p, q, probe))
                except IndexConstraintViolated:
                    continue
    return rows


def probe_set(n: int, max_weight: int) -> list:
    """All monomials of degree <= n in w_1..w_{max_weight+1}, 1 included."""
    slots = range(1, max_weight + 2)
    probes = []
    for deg in range(n + 1):
        for combo in combinations_with_replacement(slots, deg):
            exps: dict = {}
            for s in combo:
                exps[(W_VERTEX, s)] = exps.get((W_VERTEX, s), 0) + 1
            probes.append(Poly.monomial(exps, 1) if combo else Poly.const(1))
    return probes


def faithfulness_probe(n: int, max_weight: int) -> dict:
    """Rank of the evaluation matrix of standard monomials of length n.

    Each standard monomial of weight <= max_weight is evaluated on the
    probe set; the report compares the matrix rank with the monomial count.
    Rank deficiency would only ever be evidence, not a verdict.
    """
    if n > 3:
        raise ValueError("probe supports n <= 3")
    if n == 0:
        return {"n": 0, "monomials": 1, "rank": 1, "full_rank": True, "words": ["1"]}
    words = []
    for weight in range(max_weight + 1):
        words.extend(standard_monomials(n, weight))
    probes = probe_set(n, max_weight)
    # flatten each evaluation into a row over (probe index, output monomial)
    column_index: dict = {}
    raw_rows = []
    for word in words:
        entries = {}
        for k, probe in enumerate(probes):
            image = apply_word(word, probe)
            for exps, coeff in image.monomials():
                key = (k, tuple(sorted(exps.items())))
                if key not in column_index:
                    column_index[key] = len(column_index)
                entries[column_index[key]] = coeff
        raw_rows.append(entries)
    width = len(column_index)
    space = RowSpace(width)
    for entries in raw_rows:
        vec = [Fraction(0)] * width
        for at, coeff in entries.items():
            vec[at] = coeff
        space.insert(vec)
    return {
        "n": n,
        "max_weight": max_weight,
        "monomials": len(words),
        "rank": space.rank,
        "full_rank": space.rank == len(words),
        "words": [render_word(word) for word in words],
    }

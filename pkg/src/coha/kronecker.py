"""The central-slope algebra of the Kronecker quiver.

Degree-(n,n) semistable classes for the stability (1,0) form an N-graded
algebra generated in degree one by e_n = x^n (n >= 0) and
f_n = x^{n-1}(y-x) (n >= 1).  This module provides those generators as
polynomial representatives, the defining relations and their verification
inside the semistable quotient, the closed multiplication maps for small
dimension vectors, normal ordering of generator words onto the standard
basis e_0 < e_1 < ... < f_1 < f_2 < ..., and the PBW-style dimension
cross-checks.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache

from .exactpoly import Poly, exact_div, rename_vars
from .hall import CohaElement, component_vector, shuffle_product, unit
from .quiver import builtin_quiver
from .semistable import sst_quotient, sym_series_dim, unstable_subspace

KRONECKER, THETA = builtin_quiver("k2")

RELATION_KINDS = ("EE", "EF_lt", "EF_gt", "FF")


class IndexConstraintViolated(ValueError):
    """Relation indices outside the admissible range for the kind."""


@dataclass(frozen=True, order=True)
class GenIndex:
    """Generator label: kind 'e' with n >= 0 or kind 'f' with n >= 1.

    The dataclass ordering (kind, then index) is exactly the standard
    ordering used for normal forms.
    """

    kind: str
    n: int

    def __post_init__(self):
        if self.kind not in ("e", "f"):
            raise ValueError(f"unknown generator kind {self.kind!r}")
        if self.kind == "e" and self.n < 0:
            raise ValueError("e-generators need n >= 0")
        if self.kind == "f" and self.n < 1:
            raise ValueError("f-generators need n >= 1")

    @property
    def weight(self) -> int:
        return self.n

    def __str__(self):
        return f"{self.kind}{self.n}"


def E(n: int) -> GenIndex:
    return GenIndex("e", n)


def F(n: int) -> GenIndex:
    return GenIndex("f", n)


def parse_word(text: str) -> tuple:
    """Word syntax: whitespace-separated letters like 'e0 e1 f2'."""
    letters = []
    for token in text.split():
        kind, digits = token[:1], token[1:]
        if kind not in ("e", "f") or not digits.isdigit():
            raise ValueError(f"bad generator token {token!r}")
        letters.append(GenIndex(kind, int(digits)))
    return tuple(letters)


def render_word(word) -> str:
    return " ".join(str(g) for g in word) if word else "1"


def word_weight(word) -> int:
    return sum(g.weight for g in word)


_X = Poly.variable((0, 1))
_Y = Poly.variable((1, 1))


@lru_cache(maxsize=None)
def generator_element(g: GenIndex) -> CohaElement:
    """Representative of a degree-one generator in H(K2)_{(1,1)} = Q[x,y]."""
    if g.kind == "e":
        poly = _X ** g.n
    else:
        poly = _X ** (g.n - 1) * (_Y - _X)
    return CohaElement(KRONECKER, (1, 1), poly)


def relation_sides(kind: str, p: int, q: int):
    """(lhs, rhs) of a defining relation, both computed in H(K2)_{(2,2)}.

    EE (p<q):    [e_p, e_q] = 2(e_p f_q + e_{p+1} f_{q-1} + ... + e_{q-1} f_{p+1})
    EF_lt (p<q): [e_p, f_{q+1}] = f_{p+1} f_q + ... + f_q f_{p+1}
    EF_gt (p>q): [e_p, f_{q+1}] = -(f_{q+1} f_p + ... + f_p f_{q+1})
    FF (p<q):    [f_{p+1}, f_{q+1}] = 0
    """
    if p < 0 or q < 0:
        raise IndexConstraintViolated("indices must be nonnegative")
    if kind == "EE":
        if not p < q:
            raise IndexConstraintViolated("EE needs p < q")
        a, b = generator_element(E(p)), generator_element(E(q))
        lhs = shuffle_product(a, b) - shuffle_product(b, a)
        rhs = _zero22()
        for j in range(q - p):
            rhs = rhs + shuffle_product(
                generator_element(E(p + j)), generator_element(F(q - j))
            ) * 2
        return lhs, rhs
    if kind in ("EF_lt", "EF_gt"):
        if kind == "EF_lt" and not p < q:
            raise IndexConstraintViolated("EF_lt needs p < q")
        if kind == "EF_gt" and not p > q:
            raise IndexConstraintViolated("EF_gt needs p > q")
        a, b = generator_element(E(p)), generator_element(F(q + 1))
        lhs = shuffle_product(a, b) - shuffle_product(b, a)
        rhs = _zero22()
        if kind == "EF_lt":
            for t in range(q - p):
                rhs = rhs + shuffle_product(
                    generator_element(F(p + 1 + t)), generator_element(F(q - t))
                )
        else:
            for t in range(p - q):
                rhs = rhs - shuffle_product(
                    generator_element(F(q + 1 + t)), generator_element(F(p - t))
                )
        return lhs, rhs
    if kind == "FF":
        if not p < q:
            raise IndexConstraintViolated("FF needs p < q")
        a, b = generator_element(F(p + 1)), generator_element(F(q + 1))
        lhs = shuffle_product(a, b) - shuffle_product(b, a)
        return lhs, _zero22()
    raise IndexConstraintViolated(f"unknown relation kind {kind!r}")


def _zero22() -> CohaElement:
    return CohaElement(KRONECKER, (2, 2), Poly.zero())


def relation_degree(kind: str, p: int, q: int) -> int:
    if kind == "EE":
        return p + q
    if kind in ("EF_lt", "EF_gt"):
        return p + q + 1
    return p + q + 2


def relation_check(kind: str, p: int, q: int):
    """(holds, certificate): does lhs - rhs lie in the unstable subspace?

    The certificate lists the coefficients of the difference over the
    echelon rows of the unstable subspace of H(K2)_{(2,2)} in the relevant
    degree; it is None exactly when the relation fails.
    """
    lhs, rhs = relation_sides(kind, p, q)
    diff = lhs - rhs
    m = relation_degree(kind, p, q)
    sub = unstable_subspace(KRONECKER, THETA, (2, 2), m)
    cert = sub.membership_certificate(component_vector(diff, m))
    if cert is None:
        return False, None
    return True, tuple(cert)


def relation_grid(p_max: int, q_max: int):
    """All admissible relation checks with p <= p_max, q <= q_max."""
    rows = []
    for kind in RELATION_KINDS:
        for p in range(p_max + 1):
            for q in range(q_max + 1):
                try:
                    holds, cert = relation_check(kind, p, q)
                except IndexConstraintViolated:
                    continue
                rows.append(
                    {
                        "kind": kind,
                        "p": p,
                        "q": q,
                        "holds": holds,
                        "certificate_nonzero": bool(cert) and any(cert),
                    }
                )
    return rows


# -- closed multiplication maps for small dimension vectors -----------------


def closed_form_product(which: int, f: Poly, g: Poly) -> CohaElement:
    """The three explicit multiplication maps into H(K2) for small dims.

    which=1: (1,0) x (0,1) -> (1,1);  f in Q[x], g in Q[y]
    which=2: (1,0) x (1,2) -> (2,2);  f in Q[x], g in Q[x] x Q[y1,y2]^sym
    which=3: (1,1) x (1,1) -> (2,2);  f, g in Q[x,y]
    """
    x1, x2 = Poly.variable((0, 1)), Poly.variable((0, 2))
    y1, y2 = Poly.variable((1, 1)), Poly.variable((1, 2))
    if which == 1:
        poly = f * g * (y1 - x1) ** 2
        return CohaElement(KRONECKER, (1, 1), poly)
    if which == 2:
        fx1, fx2 = f, rename_vars(f, {(0, 1): (0, 2)})
        gx2 = rename_vars(g, {(0, 1): (0, 2)})
        top = fx1 * gx2 * (y1 - x1) ** 2 * (y2 - x1) ** 2 - fx2 * g * (
            y1 - x2
        ) ** 2 * (y2 - x2) ** 2
        poly = exact_div(top, x2 - x1)
        return CohaElement(KRONECKER, (2, 2), poly)
    if which == 3:

        def sub(p, xs, ys):
            return rename_vars(p, {(0, 1): (0, xs), (1, 1): (1, ys)})

        top = (
            sub(f, 1, 1) * sub(g, 2, 2) * (y2 - x1) ** 2
            - sub(f, 1, 2) * sub(g, 2, 1) * (y1 - x1) ** 2
            - sub(f, 2, 1) * sub(g, 1, 2) * (y2 - x2) ** 2
            + sub(f, 2, 2) * sub(g, 1, 1) * (y1 - x2) ** 2
        )
        poly = exact_div(top, (x2 - x1) * (y2 - y1))
        return CohaElement(KRONECKER, (2, 2), poly)
    raise ValueError("which must be 1, 2 or 3")


_CLOSED_FORM_DIMS = {1: ((1, 0), (0, 1)), 2: ((1, 0), (1, 2)), 3: ((1, 1), (1, 1))}


def closed_form_check(which: int, f: Poly, g: Poly) -> bool:
    """Does the shuffle product agree with the closed multiplication map?"""
    d1, d2 = _CLOSED_FORM_DIMS[which]
    lhs = shuffle_product(
        CohaElement(KRONECKER, d1, f), CohaElement(KRONECKER, d2, g)
    )
    return lhs.poly == closed_form_product(which, f, g).poly


# -- normal ordering ---------------------------------------------------------


def is_standard(word) -> bool:
    return all(word[i] <= word[i + 1] for i in range(len(word) - 1))


def normal_order(word) -> dict:
    """Rewrite a word onto the standard-ordered basis.

    Returns {standard word: coefficient}.  Out-of-order adjacent pairs are
    rewritten leftmost-first; every correction term drops the number of
    e-letters or the inversion count, so the rewriting terminates.
    """
    word = tuple(word)
    acc: dict = {}
    stack = [(word, Fraction(1))]
    while stack:
        w, coeff = stack.pop()
        at = next(
            (i for i in range(len(w) - 1) if w[i] > w[i + 1]),
            None,
        )
        if at is None:
            acc[w] = acc.get(w, Fraction(0)) + coeff
            continue
        a, b = w[at], w[at + 1]
        pre, post = w[:at], w[at + 2 :]
        stack.append((pre + (b, a) + post, coeff))
        if a.kind == "e" and b.kind == "e":
            p, q = b.n, a.n
            for j in range(q - p):
                stack.append((pre + (E(p + j), F(q - j)) + post, -2 * coeff))
        elif a.kind == "f" and b.kind == "e":
            m, p = a.n, b.n
            if m > p + 1:
                q = m - 1
                for t in range(q - p):
                    stack.append((pre + (F(p + 1 + t), F(q - t)) + post, -coeff))
            elif m <= p:
                for t in range(p - m + 1):
                    stack.append((pre + (F(m + t), F(p - t)) + post, coeff))
            # m == p + 1: the diagonal pair commutes outright
    return {w: c for w, c in acc.items() if c}


# -- words as semistable classes ---------------------------------------------


@lru_cache(maxsize=None)
def word_value(word: tuple) -> CohaElement:
    """Left-to-right shuffle product of the letters' representatives."""
    if not word:
        return unit(KRONECKER)
    if len(word) == 1:
        return generator_element(word[0])
    return shuffle_product(word_value(word[:-1]), generator_element(word[-1]))


@lru_cache(maxsize=None)
def _quotient_vector(word: tuple) -> tuple:
    value = word_value(word)
    m = word_weight(word)
    sub = unstable_subspace(KRONECKER, THETA, value.dim, m)
    residual = sub.reduce_vector(component_vector(value, m))
    return tuple(residual[i] for i in sub.rep_indices())


def word_to_quotient(word) -> tuple:
    """Class of the word's value in the semistable quotient of its weight."""
    return _quotient_vector(tuple(word))


def normal_form_to_quotient(form: dict) -> tuple:
    """Evaluate a normal form term by term in the quotient."""
    total = None
    for w, coeff in sorted(form.items()):
        vec = word_to_quotient(w)
        if total is None:
            total = [coeff * x for x in vec]
        else:
            total = [t + coeff * x for t, x in zip(total, vec)]
    return tuple(total) if total is not None else ()


# -- PBW-style dimension checks ----------------------------------------------


def standard_monomials(n: int, weight: int) -> tuple:
    """Standard-ordered words of length n and total weight, sorted."""
    letters = [E(w) for w in range(weight + 1)] + [F(w) for w in range(1, weight + 1)]
    letters.sort()
    out = []

    def build(start, length, remaining, prefix):
        if length == 0:
            if remaining == 0:
                out.append(tuple(prefix))
            return
        for i in range(start, len(letters)):
            g = letters[i]
            if g.weight > remaining:
                continue
            build(i, length - 1, remaining - g.weight, prefix + [g])

    build(0, n, weight, [])
    return tuple(sorted(out))


#: generator families of the length-graded symmetric-algebra model of the
#: central-slope algebra: one family starting in cohomological degree 0,
#: one starting in degree 2, both tensored with Q[z].
SERIES_GENERATORS = (((1,), 0), ((1,), 2))


def pbw_check(n: int, coh_max: int) -> list:
    """Quotient dimension vs standard-monomial count vs series coefficient.

    Rows cover the even cohomological degrees 0..coh_max (the polynomial
    degree m contributes coh = 2m since <(n,n),(n,n)> = 0).
    """
    rows = []
    for m in range(coh_max // 2 + 1):
        quotient_dim, _ = sst_quotient(KRONECKER, THETA, (n, n), m)
        monomial_count = len(standard_monomials(n, m))
        series_coeff = sym_series_dim(SERIES_GENERATORS, (n,), 2 * m)
        rows.append(
            {
                "n": n,
                "degree": m,
                "coh": 2 * m,
                "quotient_dim": quotient_dim,
                "monomial_count": monomial_count,
                "series_coeff": series_coeff,
                "pass": quotient_dim == monomial_count == series_coeff,
            }
        )
    return rows

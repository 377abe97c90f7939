"""The twisted-symmetrizer operator on tensor squares of the degree-one part.

The operator c acts on two-letter tensors of generators e_n, f_n.  On the
generating series it swaps the factors and adds corrections built from the
divided-difference series

    P(X,Y) = sum e_{a+b} X^a Y^b,      R(X,Y) = sum f_{a+b+1} X^a Y^b:

    c(E(X) (x) E(Y)) = E(Y) (x) E(X) + (Y-X) (P (x) R + R (x) P)
    c(E(X) (x) F(Y)) = F(Y) (x) E(X) + (Y-X) (R (x) R)
    c(F(X) (x) E(Y)) = E(Y) (x) F(X) + (Y-X) (R (x) R)
    c(F(X) (x) F(Y)) = F(Y) (x) F(X)

Basis-level coefficients come from extracting the X^p Y^q component, which
is a finite sum; c preserves total weight exactly, so no truncation is ever
involved.  c^2 = id holds and is checked exhaustively; the quantum
Yang-Baxter property is evaluated experimentally on weight-bounded triples.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .kronecker import E, F, GenIndex, render_word, word_weight


@dataclass(frozen=True)
class TensorElement:
    """Weight-homogeneous element of the 2- or 3-fold tensor power."""

    arity: int
    terms: dict

    def __post_init__(self):
        if self.arity not in (2, 3):
            raise ValueError("arity must be 2 or 3")
        cleaned = {}
        weights = set()
        for key, coeff in self.terms.items():
            coeff = Fraction(coeff)
            if not coeff:
                continue
            key = tuple(key)
            if len(key) != self.arity or not all(isinstance(g, GenIndex) for g in key):
                raise ValueError(f"bad tensor key {key!r}")
            weights.add(word_weight(key))
            cleaned[key] = coeff
        if len(weights) > 1:
            raise ValueError("tensor element mixes total weights")
        object.__setattr__(self, "terms", cleaned)

    @classmethod
    def basis(cls, *letters) -> "TensorElement":
        return cls(len(letters), {tuple(letters): Fraction(1)})

    @property
    def weight(self):
        for key in self.terms:
            return word_weight(key)
        return None

    def __add__(self, other) -> "TensorElement":
        if self.arity != other.arity:
            raise ValueError("arity mismatch")
        merged = dict(self.terms)
        for key, c in other.terms.items():
            merged[key] = merged.get(key, Fraction(0)) + c
        return TensorElement(self.arity, merged)

    def __sub__(self, other) -> "TensorElement":
        return self + (other * -1)

    def __mul__(self, scalar) -> "TensorElement":
        return TensorElement(
            self.arity, {key: c * scalar for key, c in self.terms.items()}
        )

    __rmul__ = __mul__

    def render(self) -> str:
        if not self.terms:
            return "0"
        bits = []
        for key in sorted(self.terms):
            c = self.terms[key]
            body = "(x)".join(str(g) for g in key)
            bits.append(f"{c}*{body}" if c != 1 else body)
        return " + ".join(bits)


def _series_pair_sums(p: int, q: int, left_kind: str, right_kind: str) -> dict:
    """Coefficient of X^p Y^q in (Y-X) * (S_left (x) S_right).

    S_e is the e-series P, S_f the f-series R; the bilinear expansion gives
    left index a+b and right index c+d (+1 for f) over a+c = p, b+d = q.
    """

    def letter(kind, s):
        return E(s) if kind == "e" else F(s + 1)

    out: dict = {}

    def accumulate(pp, qq, sign):
        if pp < 0 or qq < 0:
            return
        for a in range(pp + 1):
            c = pp - a
            for b in range(qq + 1):
                d = qq - b
                key = (letter(left_kind, a + b), letter(right_kind, c + d))
                out[key] = out.get(key, 0) + sign
        return

    accumulate(p, q - 1, 1)
    accumulate(p - 1, q, -1)
    return {key: Fraction(v) for key, v in out.items() if v}


def c_pair(g: GenIndex, h: GenIndex) -> dict:
    """Image of the basis tensor g (x) h under c, as {pair: coefficient}."""
    if g.kind == "f" and h.kind == "f":
        return {(h, g): Fraction(1)}
    if g.kind == "e" and h.kind == "e":
        out = {(h, g): Fraction(1)}
        for key, c in _series_pair_sums(g.n, h.n, "e", "f").items():
            out[key] = out.get(key, Fraction(0)) + c
        for key, c in _series_pair_sums(g.n, h.n, "f", "e").items():
            out[key] = out.get(key, Fraction(0)) + c
        return {key: c for key, c in out.items() if c}
    if g.kind == "e" and h.kind == "f":
        p, q = g.n, h.n - 1
    else:
        p, q = g.n - 1, h.n
    out = {(h, g): Fraction(1)}
    for key, c in _series_pair_sums(p, q, "f", "f").items():
        out[key] = out.get(key, Fraction(0)) + c
    return {key: c for key, c in out.items() if c}


def c_apply(t: TensorElement) -> TensorElement:
    """Linear extension of c on arity-2 tensors."""
    if t.arity != 2:
        raise ValueError("c acts on two-tensors; use apply_at for triples")
    out: dict = {}
    for (g, h), coeff in t.terms.items():
        for key, c in c_pair(g, h).items():
            out[key] = out.get(key, Fraction(0)) + coeff * c
    return TensorElement(2, out)


def apply_at(t: TensorElement, position: int) -> TensorElement:
    """Apply c to factors (position, position+1) of an arity-3 tensor."""
    if t.arity != 3 or position not in (0, 1):
        raise ValueError("position must be 0 or 1 on an arity-3 tensor")
    out: dict = {}
    for key, coeff in t.terms.items():
        g, h = key[position], key[position + 1]
        for (gg, hh), c in c_pair(g, h).items():
            if position == 0:
                new = (gg, hh, key[2])
            else:
                new = (key[0], gg, hh)
            out[new] = out.get(new, Fraction(0)) + coeff * c
    return TensorElement(3, out)


def basis_letters(weight: int):
    """Generators of one weight: e_w always, f_w for w >= 1."""
    letters = [E(weight)]
    if weight >= 1:
        letters.append(F(weight))
    return letters


def basis_tensors(arity: int, max_weight: int):
    """All basis tensors of total weight <= max_weight, sorted."""
    out = []

    def build(prefix, remaining):
        if len(prefix) == arity:
            out.append(tuple(prefix))
            return
        for w in range(remaining + 1):
            for g in basis_letters(w):
                build(prefix + [g], remaining - w)

    build([], max_weight)
    return sorted(out)


def involution_check(max_weight: int) -> list:
    """Apply c twice to every basis two-tensor of weight <= max_weight."""
    rows = []
    for pair in basis_tensors(2, max_weight):
        t = TensorElement.basis(*pair)
        back = c_apply(c_apply(t))
        rows.append(
            {
                "tensor": render_word(pair),
                "weight": word_weight(pair),
                "pass": back.terms == t.terms,
            }
        )
    return rows


def ybe_check(max_weight: int) -> list:
    """Evaluate both Yang-Baxter compositions on weight-bounded triples.

    The outcome is recorded as experimental evidence; rows report equality
    per basis triple.
    """
    rows = []
    for triple in basis_tensors(3, max_weight):
        t = TensorElement.basis(*triple)
        lhs = apply_at(apply_at(apply_at(t, 0), 1), 0)
        rhs = apply_at(apply_at(apply_at(t, 1), 0), 1)
        rows.append(
            {
                "tensor": render_word(triple),
                "weight": word_weight(triple),
                "lhs": lhs.render(),
                "rhs": rhs.render(),
                "equal": lhs.terms == rhs.terms,
            }
        )
    return rows

"""Exact sparse multivariate polynomials over the rationals.

Variables carry a (vertex, slot) index: the polynomial ring underlying a
quiver Hall algebra has one block of variables per vertex, with slots
numbered from 1.  Coefficients are exact rationals (plain ints where
possible, `fractions.Fraction` otherwise); there is no floating point
anywhere in this package.

A `Poly` stores its active variables as a sorted tuple (vertex-major,
slot-minor) and its terms as a dict from exponent tuples (aligned with the
variable tuple) to nonzero coefficients.  The term order used for division
and for canonical text output is graded lexicographic: higher total degree
first, ties broken by the exponent tuple read from the first variable.
"""

from __future__ import annotations

import heapq
import re
from fractions import Fraction
from typing import Iterable, Mapping, Sequence

Var = tuple  # (vertex index, slot >= 1)


#: letter used to render each vertex block, by vertex position
BLOCK_LETTERS = "xyzuvw"


class NotDivisible(ArithmeticError):
    """Raised by exact_div when the quotient does not exist."""


class InvalidPermutation(ValueError):
    """Raised by permute_slots for maps that are not per-vertex bijections."""


class PolyParseError(ValueError):
    """Raised on malformed polynomial text; carries the offending position."""

    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at position {position})")
        self.position = position


def _as_coeff(c):
    """Exact coefficient: plain int when integral, Fraction otherwise.

    Integer coefficients are the common case in every shuffle computation;
    keeping them as machine ints instead of Fractions is a large speedup.
    Mixed int/Fraction arithmetic stays exact either way.
    """
    if isinstance(c, int):
        return c
    if isinstance(c, Fraction):
        return c.numerator if c.denominator == 1 else c
    raise TypeError(f"expected an exact rational, got {type(c).__name__}")


def _coeff_div(a, b):
    """Exact a / b staying in int when the quotient is integral."""
    if isinstance(a, int) and isinstance(b, int):
        quot, rem = divmod(a, b)
        if rem == 0:
            return quot
        return Fraction(a, b)
    return Fraction(a) / b


class Poly:
    """Immutable sparse polynomial with exact rational coefficients."""

    __slots__ = ("vars", "terms", "_hash")

    def __init__(self, vars: Sequence, terms: Mapping):
        vars = tuple(vars)
        cleaned = {}
        used = [False] * len(vars)
        for mono, coeff in terms.items():
            coeff = _as_coeff(coeff)
            if not coeff:
                continue
            mono = tuple(mono)
            if len(mono) != len(vars):
                raise ValueError("exponent tuple does not match variable tuple")
            cleaned[mono] = coeff
            for i, e in enumerate(mono):
                if e < 0:
                    raise ValueError("negative exponent")
                if e:
                    used[i] = True
        if not all(used):
            keep = [i for i, u in enumerate(used) if u]
            vars = tuple(vars[i] for i in keep)
            cleaned = {
                tuple(mono[i] for i in keep): c for mono, c in cleaned.items()
            }
        if list(vars) != sorted(vars):
            order = sorted(range(len(vars)), key=lambda i: vars[i])
            cleaned = {
                tuple(mono[i] for i in order): c for mono, c in cleaned.items()
            }
            vars = tuple(sorted(vars))
        object.__setattr__(self, "vars", vars)
        object.__setattr__(self, "terms", cleaned)
        object.__setattr__(self, "_hash", None)

    def __setattr__(self, name, value):
        raise AttributeError("Poly is immutable")

    @classmethod
    def _build(cls, vars: tuple, terms: dict) -> "Poly":
        """Trusted fast path: vars already sorted, exponents valid.

        Still drops zero coefficients and prunes unused variables so that
        structural equality stays canonical.
        """
        cleaned = {k: c for k, c in terms.items() if c}
        nvars = len(vars)
        if nvars:
            used = [False] * nvars
            hits = 0
            for mono in cleaned:
                for i in range(nvars):
                    if not used[i] and mono[i]:
                        used[i] = True
                        hits += 1
                if hits == nvars:
                    break
            if hits != nvars:
                keep = [i for i, u in enumerate(used) if u]
                vars = tuple(vars[i] for i in keep)
                cleaned = {
                    tuple(mono[i] for i in keep): c for mono, c in cleaned.items()
                }
        poly = cls.__new__(cls)
        object.__setattr__(poly, "vars", vars)
        object.__setattr__(poly, "terms", cleaned)
        object.__setattr__(poly, "_hash", None)
        return poly

    # -- constructors ------------------------------------------------------

    @classmethod
    def zero(cls) -> "Poly":
        return cls((), {})

    @classmethod
    def const(cls, c) -> "Poly":
        c = _as_coeff(c)
        return cls((), {(): c} if c else {})

    @classmethod
    def variable(cls, v) -> "Poly":
        return cls((tuple(v),), {(1,): 1})

    @classmethod
    def monomial(cls, exps: Mapping, coeff=1) -> "Poly":
        """Single term from a {(vertex, slot): exponent} map."""
        items = sorted((tuple(v), e) for v, e in exps.items() if e)
        vars = tuple(v for v, _ in items)
        mono = tuple(e for _, e in items)
        return cls(vars, {mono: _as_coeff(coeff)})

    # -- basic queries -----------------------------------------------------

    def is_zero(self) -> bool:
        return not self.terms

    def degree(self) -> int:
        """Total degree; the zero polynomial reports -1."""
        if not self.terms:
            return -1
        return max(sum(m) for m in self.terms)

    def is_homogeneous(self) -> bool:
        degs = {sum(m) for m in self.terms}
        return len(degs) <= 1

    def homogeneous_component(self, m: int) -> "Poly":
        return Poly._build(
            self.vars, {k: c for k, c in self.terms.items() if sum(k) == m}
        )

    def coefficient(self, exps: Mapping):
        """Coefficient of the monomial given as a {(vertex, slot): exp} map."""
        wanted = {tuple(v): e for v, e in exps.items() if e}
        if not set(wanted) <= set(self.vars):
            return 0
        key = tuple(wanted.get(v, 0) for v in self.vars)
        return self.terms.get(key, 0)

    def monomials(self):
        """Iterate (exponent map, coefficient) pairs in no particular order."""
        for mono, c in self.terms.items():
            yield {v: e for v, e in zip(self.vars, mono) if e}, c

    # -- arithmetic --------------------------------------------------------

    def __neg__(self) -> "Poly":
        return Poly._build(self.vars, {k: -c for k, c in self.terms.items()})

    def __add__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(other)
        vars, aterms, bterms = _align(self, other)
        merged = dict(aterms)
        for k, c in bterms.items():
            merged[k] = merged.get(k, 0) + c
        return Poly._build(vars, merged)

    __radd__ = __add__

    def __sub__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            other = Poly.const(other)
        return self + (-other)

    def __rsub__(self, other) -> "Poly":
        return (-self) + other

    def __mul__(self, other) -> "Poly":
        if not isinstance(other, Poly):
            c = _as_coeff(other)
            if not c:
                return Poly.zero()
            return Poly._build(self.vars, {k: v * c for k, v in self.terms.items()})
        vars, aterms, bterms = _align(self, other)
        if len(aterms) > len(bterms):
            aterms, bterms = bterms, aterms
        out: dict = {}
        get = out.get
        for ma, ca in aterms.items():
            for mb, cb in bterms.items():
                key = tuple(map(int.__add__, ma, mb))
                prev = get(key)
                out[key] = ca * cb if prev is None else prev + ca * cb
        return Poly._build(vars, out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> "Poly":
        if not isinstance(n, int) or n < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = Poly.const(1)
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base if n > 1 else base
            n >>= 1
        return result

    # -- comparison --------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            if other == 0:
                return self.is_zero()
            return self == Poly.const(other)
        return self.vars == other.vars and self.terms == other.terms

    def __hash__(self):
        h = self._hash
        if h is None:
            h = hash((self.vars, frozenset(self.terms.items())))
            object.__setattr__(self, "_hash", h)
        return h

    def __bool__(self):
        return bool(self.terms)

    def __repr__(self):
        return f"Poly({render_poly(self)})"

    def sorted_terms(self):
        """Terms in descending graded-lex order."""
        return sorted(self.terms.items(), key=lambda kv: _order_key(kv[0]), reverse=True)


def _order_key(mono):
    return (sum(mono), mono)


def _align(a: Poly, b: Poly):
    """Common variable tuple plus both term dicts re-indexed to it."""
    if a.vars == b.vars:
        return a.vars, a.terms, b.terms
    vars = tuple(sorted(set(a.vars) | set(b.vars)))
    return vars, _reindex(a, vars), _reindex(b, vars)


def _reindex(p: Poly, vars):
    if p.vars == vars:
        return p.terms
    pos = {v: i for i, v in enumerate(vars)}
    idx = [pos[v] for v in p.vars]
    n = len(vars)
    out = {}
    for mono, c in p.terms.items():
        key = [0] * n
        for i, e in zip(idx, mono):
            key[i] = e
        out[tuple(key)] = c
    return out


def poly_sum(polys: Iterable[Poly]) -> Poly:
    total = Poly.zero()
    for p in polys:
        total = total + p
    return total


def _div_variable_difference(nterms: dict, iu: int, iv: int, den: Poly):
    """Quotient of a term dict by (x_u - x_v), by prefix sums along fibers.

    Writing a, b for the x_u, x_v exponents, the identity q*(x_u - x_v) = P
    forces q_{a-1,b} = P_{a,b} + q_{a,b-1} along each diagonal a+b = s with
    the other exponents fixed, i.e. one running sum per fiber, ending in a
    zero remainder exactly when the division is possible.
    """
    fibers: dict = {}
    for mono, coeff in nterms.items():
        a, b = mono[iu], mono[iv]
        rest = list(mono)
        rest[iu] = rest[iv] = 0
        key = (tuple(rest), a + b)
        fibers.setdefault(key, {})[b] = coeff
    quotient: dict = {}
    for (rest, s), line in fibers.items():
        carry = 0
        base = list(rest)
        for b in range(s):
            carry = line.get(b, 0) + carry
            if carry:
                base[iu] = s - 1 - b
                base[iv] = b
                quotient[tuple(base)] = carry
        if line.get(s, 0) + carry:
            raise NotDivisible(render_poly(den))
    return quotient


def exact_div(num: Poly, den: Poly) -> Poly:
    """Exact quotient q with q*den == num, else NotDivisible.

    Multivariate long division against the graded-lex leading term of the
    divisor; differences of two variables (the kernel denominators) take a
    heap-free fiber-sum path.  When the quotient exists the greedy division
    never gets stuck, so a failed step or a nonzero remainder certifies
    non-divisibility.
    """
    if den.is_zero():
        raise ZeroDivisionError("division by the zero polynomial")
    if num.is_zero():
        return Poly.zero()
    vars = tuple(sorted(set(num.vars) | set(den.vars)))
    nterms = _reindex(num, vars)
    if len(den.terms) == 2:
        unit = {}
        for mono, coeff in _reindex(den, vars).items():
            if sum(mono) == 1 and coeff in (1, -1):
                unit[coeff] = mono.index(1)
        if len(unit) == 2:
            quotient = _div_variable_difference(nterms, unit[1], unit[-1], den)
            return Poly._build(vars, quotient)
    dterms = sorted(_reindex(den, vars).items(), key=lambda kv: _order_key(kv[0]), reverse=True)
    lead_mono, lead_coeff = dterms[0]
    tail = dterms[1:]

    work = dict(nterms)
    heap = [(-sum(m), tuple(-e for e in m)) for m in work]
    heapq.heapify(heap)
    pop, push = heapq.heappop, heapq.heappush
    quotient: dict = {}
    sub, add = int.__sub__, int.__add__
    while heap:
        _, neg = pop(heap)
        mono = tuple(map(int.__neg__, neg))
        coeff = work.pop(mono, None)
        if coeff is None:
            continue
        qmono = tuple(map(sub, mono, lead_mono))
        if min(qmono, default=0) < 0:
            raise NotDivisible(render_poly(den))
        qcoeff = _coeff_div(coeff, lead_coeff)
        quotient[qmono] = quotient.get(qmono, 0) + qcoeff
        for dm, dc in tail:
            key = tuple(map(add, qmono, dm))
            prev = work.get(key, 0)
            new = prev - qcoeff * dc
            if new:
                work[key] = new
                if not prev:
                    push(heap, (-sum(key), tuple(map(int.__neg__, key))))
            else:
                work.pop(key, None)
    if work:
        raise NotDivisible(render_poly(den))
    return Poly._build(vars, quotient)


def rename_vars(p: Poly, mapping: Mapping) -> Poly:
    """Injectively rename variables; unmapped variables stay put."""
    new_vars = [tuple(mapping.get(v, v)) for v in p.vars]
    if len(set(new_vars)) != len(new_vars):
        raise InvalidPermutation("variable renaming is not injective")
    order = sorted(range(len(new_vars)), key=lambda i: new_vars[i])
    vars = tuple(new_vars[i] for i in order)
    terms = {tuple(mono[i] for i in order): c for mono, c in p.terms.items()}
    return Poly(vars, terms)


def permute_slots(p: Poly, perm: Mapping[int, Sequence[int]]) -> Poly:
    """Apply a per-vertex slot permutation.

    `perm[v]` lists the image of slots 1..len(perm[v]) at vertex v; vertices
    absent from the map are left alone.
    """
    mapping = {}
    for v, images in perm.items():
        images = list(images)
        if sorted(images) != list(range(1, len(images) + 1)):
            raise InvalidPermutation(f"not a bijection on slots of vertex {v}")
        for k, image in enumerate(images, start=1):
            mapping[(v, k)] = (v, image)
    for vert, slot in p.vars:
        if vert in perm and slot > len(perm[vert]):
            raise InvalidPermutation(
                f"slot {slot} at vertex {vert} outside the permuted range"
            )
    return rename_vars(p, mapping)


# -- text form -------------------------------------------------------------


def var_name(v, letters: str = BLOCK_LETTERS) -> str:
    vert, slot = v
    if vert >= len(letters):
        raise ValueError(f"no display letter for vertex {vert}")
    return f"{letters[vert]}{slot}"


def render_poly(p: Poly, letters: str = BLOCK_LETTERS) -> str:
    """Canonical text: terms in descending graded-lex order."""
    if p.is_zero():
        return "0"
    pieces = []
    for mono, coeff in p.sorted_terms():
        factors = []
        for v, e in zip(p.vars, mono):
            if e == 1:
                factors.append(var_name(v, letters))
            elif e > 1:
                factors.append(f"{var_name(v, letters)}^{e}")
        mag = abs(coeff)
        if not factors:
            body = str(mag)
        elif mag == 1:
            body = "*".join(factors)
        else:
            body = "*".join([str(mag)] + factors)
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)


_TOKEN = re.compile(r"\s*(?:(?P<num>\d+(?:/\d+)?)|(?P<name>[a-zA-Z]+\d*)|(?P<op>[\^*+-]))")


def parse_poly(text: str, letters: Mapping[str, int] | None = None) -> Poly:
    """Parse the canonical polynomial syntax.

    Terms are separated by + and -, factors by '*' (or just whitespace);
    a factor is a rational number or a variable `x`/`x2` with an optional
    `^k` power.  `letters` maps variable letters to vertex indices and
    defaults to x,y,z,u -> 0,1,2,3.  A bare letter means slot 1.
    """
    if letters is None:
        letters = {ch: i for i, ch in enumerate(BLOCK_LETTERS)}
    tokens = []
    pos = 0
    while pos < len(text):
        m = _TOKEN.match(text, pos)
        if not m or m.end() == m.start():
            if text[pos:].strip():
                raise PolyParseError(f"unexpected character {text[pos]!r}", pos)
            break
        kind = m.lastgroup
        tokens.append((kind, m.group(kind), m.start(kind)))
        pos = m.end()
    tokens.append(("end", "", len(text)))

    total = Poly.zero()
    i = 0

    def parse_factor(i):
        kind, value, at = tokens[i]
        if kind == "num":
            if "/" in value:
                a, b = value.split("/")
                if int(b) == 0:
                    raise PolyParseError("zero denominator", at)
                base = Poly.const(Fraction(int(a), int(b)))
            else:
                base = Poly.const(int(value))
            i += 1
        elif kind == "name":
            letter = value.rstrip("0123456789")
            digits = value[len(letter):]
            if letter not in letters:
                raise PolyParseError(f"unknown variable {value!r}", at)
            slot = int(digits) if digits else 1
            if slot < 1:
                raise PolyParseError("slots are numbered from 1", at)
            base = Poly.variable((letters[letter], slot))
            i += 1
        else:
            raise PolyParseError(f"expected a factor, got {value!r}", at)
        if tokens[i][0] == "op" and tokens[i][1] == "^":
            kind, value, at = tokens[i + 1]
            if kind != "num" or "/" in value:
                raise PolyParseError("exponent must be a nonnegative integer", at)
            base = base ** int(value)
            i += 2
        return base, i

    while tokens[i][0] != "end":
        sign = 1
        while tokens[i][0] == "op" and tokens[i][1] in "+-":
            if tokens[i][1] == "-":
                sign = -sign
            i += 1
        if tokens[i][0] == "end":
            raise PolyParseError("dangling sign", tokens[i][2])
        term, i = parse_factor(i)
        while True:
            if tokens[i][0] == "op" and tokens[i][1] == "*":
                factor, i = parse_factor(i + 1)
            elif tokens[i][0] in ("num", "name"):
                factor, i = parse_factor(i)
            else:
                break
            term = term * factor
        total = total + term * sign
    return total

"""Quivers, dimension vectors, the Euler form, slopes, and HN types."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import product
from typing import Mapping, Sequence

import yaml


class VertexMismatch(ValueError):
    """Dimension vector does not match the quiver's vertex set."""


class ZeroDimVector(ValueError):
    """Operation undefined for the zero dimension vector."""


class QuiverParseError(ValueError):
    """Malformed quiver description; message names the offending field."""


DimVector = tuple
Stability = tuple


@dataclass(frozen=True)
class Quiver:
    """Finite quiver: ordered vertex names and a tuple of (source, target) arrows."""

    vertices: tuple
    arrows: tuple

    def __post_init__(self):
        object.__setattr__(self, "vertices", tuple(self.vertices))
        object.__setattr__(self, "arrows", tuple(tuple(a) for a in self.arrows))
        if len(set(self.vertices)) != len(self.vertices):
            raise QuiverParseError("duplicate vertex names")
        for src, tgt in self.arrows:
            if src not in self.vertices or tgt not in self.vertices:
                raise QuiverParseError(f"arrow ({src}, {tgt}) uses undeclared vertices")

    @property
    def n(self) -> int:
        return len(self.vertices)

    def vertex_index(self, name) -> int:
        try:
            return self.vertices.index(name)
        except ValueError:
            raise VertexMismatch(f"unknown vertex {name!r}") from None

    def check_dim(self, d) -> tuple:
        d = tuple(int(x) for x in d)
        if len(d) != self.n:
            raise VertexMismatch(
                f"dimension vector of length {len(d)} for {self.n} vertices"
            )
        if any(x < 0 for x in d):
            raise ValueError("dimension vector entries must be nonnegative")
        return d

    def euler_matrix(self) -> tuple:
        return _euler_matrix(self)

    def is_symmetric(self) -> bool:
        mat = self.euler_matrix()
        return all(
            mat[i][j] == mat[j][i] for i in range(self.n) for j in range(self.n)
        )


@lru_cache(maxsize=None)
def _euler_matrix(q: Quiver) -> tuple:
    n = q.n
    mat = [[1 if i == j else 0 for j in range(n)] for i in range(n)]
    for src, tgt in q.arrows:
        mat[q.vertex_index(src)][q.vertex_index(tgt)] -= 1
    return tuple(tuple(row) for row in mat)


def euler_form(q: Quiver, a, b) -> int:
    """<a, b> = sum a_i b_i - sum over arrows a_src b_tgt."""
    a = q.check_dim(a)
    b = q.check_dim(b)
    mat = q.euler_matrix()
    return sum(
        mat[i][j] * a[i] * b[j] for i in range(q.n) for j in range(q.n)
    )


def slope(theta, d) -> Fraction:
    """theta(d) / (total dimension), exact."""
    d = tuple(d)
    total = sum(d)
    if total == 0:
        raise ZeroDimVector("slope of the zero dimension vector")
    if len(theta) != len(d):
        raise VertexMismatch("stability and dimension vector lengths differ")
    return Fraction(sum(t * x for t, x in zip(theta, d)), total)


def _sub_vectors(d):
    """Nonzero vectors 0 < e <= d componentwise, descending lex."""
    ranges = [range(x, -1, -1) for x in d]
    for e in product(*ranges):
        if any(e):
            yield e


def hn_types(theta, d) -> tuple:
    """All ordered decompositions of d with strictly decreasing slopes.

    Sorted by number of parts, then lexicographically; the one-part type
    (d,) always comes first.
    """
    theta = tuple(theta)
    d = tuple(int(x) for x in d)
    if not any(d):
        raise ZeroDimVector("no HN types for the zero dimension vector")

    @lru_cache(maxsize=None)
    def search(remaining, bound):
        if not any(remaining):
            return ((),)
        found = []
        for head in _sub_vectors(remaining):
            mu = slope(theta, head)
            if bound is not None and mu >= bound:
                continue
            tail_rest = tuple(r - h for r, h in zip(remaining, head))
            for tail in search(tail_rest, mu):
                found.append((head,) + tail)
        return tuple(found)

    types = search(d, None)
    return tuple(sorted(types, key=lambda t: (len(t), t)))


BUILTIN_QUIVERS = {
    # alias: (vertices, arrows, default stability)
    "a1": (("v",), (), None),
    "l1": (("v",), (("v", "v"),), None),
    "k2": (("i", "j"), (("i", "j"), ("i", "j")), (1, 0)),
    "a20tilde": (("i", "j"), (("i", "j"), ("j", "i")), (1, 0)),
}


def builtin_quiver(alias: str):
    """(Quiver, Stability or None) for a builtin alias."""
    try:
        vertices, arrows, theta = BUILTIN_QUIVERS[alias]
    except KeyError:
        raise QuiverParseError(f"unknown quiver alias {alias!r}") from None
    return Quiver(vertices, arrows), theta


def parse_quiver(spec: str):
    """Parse an alias or a structured quiver description.

    The text form is YAML/JSON:

        vertices: [i, j]
        arrows: [[i, j], [i, j]]
        theta: {i: 1, j: 0}

    Returns (Quiver, Stability or None); the stability is aligned with the
    declared vertex order.
    """
    name = spec.strip()
    if name in BUILTIN_QUIVERS:
        return builtin_quiver(name)
    try:
        data = yaml.safe_load(spec)
    except yaml.YAMLError as exc:
        raise QuiverParseError(f"invalid quiver text: {exc}") from None
    if not isinstance(data, Mapping):
        raise QuiverParseError("quiver description must be a mapping or a known alias")
    if "vertices" not in data:
        raise QuiverParseError("missing field 'vertices'")
    vertices = data["vertices"]
    if not isinstance(vertices, Sequence) or isinstance(vertices, str) or not vertices:
        raise QuiverParseError("field 'vertices' must be a nonempty list")
    vertices = tuple(str(v) for v in vertices)
    arrows = data.get("arrows", [])
    if not isinstance(arrows, Sequence) or isinstance(arrows, str):
        raise QuiverParseError("field 'arrows' must be a list of [source, target] pairs")
    parsed_arrows = []
    for k, arrow in enumerate(arrows):
        if not isinstance(arrow, Sequence) or isinstance(arrow, str) or len(arrow) != 2:
            raise QuiverParseError(f"arrow #{k} is not a [source, target] pair")
        parsed_arrows.append((str(arrow[0]), str(arrow[1])))
    quiver = Quiver(vertices, tuple(parsed_arrows))
    theta = None
    if "theta" in data and data["theta"] is not None:
        raw = data["theta"]
        if not isinstance(raw, Mapping):
            raise QuiverParseError("field 'theta' must be a {vertex: weight} mapping")
        raw = {str(k): v for k, v in raw.items()}
        unknown = set(raw) - set(vertices)
        if unknown:
            raise QuiverParseError(f"theta names unknown vertices {sorted(unknown)}")
        theta = tuple(int(raw.get(v, 0)) for v in vertices)
    return quiver, theta

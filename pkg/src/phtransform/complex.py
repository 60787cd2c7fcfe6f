"""Abstract simplicial complexes and their rational embeddings."""

from __future__ import annotations

import re
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, Sequence

from .errors import InputError
from .linalg import rank

Simplex = tuple[int, ...]
Vector = tuple[Fraction, ...]

_RATIONAL = re.compile(r"^\s*(-?\d+)(?:/(\d+))?\s*$")


def parse_rational(text: str | int) -> Fraction:
    """Parse "p", "p/q" or "-p/q" with q > 0.  Decimals and exponents are rejected."""
    if isinstance(text, bool):
        raise InputError(f"not a rational: {text!r}")
    if isinstance(text, int):
        return Fraction(text)
    m = _RATIONAL.match(str(text))
    if not m:
        raise InputError(f"not a rational: {text!r}")
    q = int(m.group(2)) if m.group(2) is not None else 1
    if q == 0:
        raise InputError(f"zero denominator: {text!r}")
    return Fraction(int(m.group(1)), q)


def format_rational(x: Fraction) -> str:
    return str(x.numerator) if x.denominator == 1 else f"{x.numerator}/{x.denominator}"


@dataclass(frozen=True)
class SimplicialComplex:
    vertices: tuple[int, ...]
    simplices: frozenset[Simplex]

    def __len__(self) -> int:
        return len(self.simplices)

    def __contains__(self, s) -> bool:
        return tuple(sorted(s)) in self.simplices

    @property
    def dim(self) -> int:
        return max(len(s) for s in self.simplices) - 1

    def of_dim(self, d: int) -> list[Simplex]:
        """Sorted list of the d-simplices."""
        return sorted(s for s in self.simplices if len(s) == d + 1)

    def maximal(self) -> list[Simplex]:
        out = []
        for s in self.simplices:
            if not any(len(t) > len(s) and set(s) <= set(t) for t in self.simplices):
                out.append(s)
        return sorted(out, key=lambda s: (len(s), s))

    def subcomplex(self, vertices: Iterable[int]) -> frozenset[Simplex]:
        """Simplices whose vertices all lie in `vertices` (the full subcomplex)."""
        vs = set(vertices)
        return frozenset(s for s in self.simplices if vs.issuperset(s))


def build_complex(maximal_simplices: Sequence[Sequence[int]]) -> SimplicialComplex:
    """Downward closure of the given simplices."""
    simplices: set[Simplex] = set()
    for raw in maximal_simplices:
        s = list(raw)
        if not s:
            raise InputError("empty simplex")
        if any((not isinstance(v, int)) or isinstance(v, bool) or v < 0 for v in s):
            raise InputError(f"vertex indices must be nonnegative integers: {raw!r}")
        if len(set(s)) != len(s):
            raise InputError(f"duplicate vertex in simplex {raw!r}")
        s.sort()
        for k in range(1, len(s) + 1):
            simplices.update(combinations(s, k))
    if not simplices:
        raise InputError("complex has no simplices")
    vertices = tuple(sorted({v for s in simplices for v in s}))
    return SimplicialComplex(vertices, frozenset(simplices))


@dataclass(frozen=True)
class GeometricComplex:
    """A simplicial complex with one rational point per vertex in R^ambient_dim."""

    complex: SimplicialComplex
    ambient_dim: int
    coords: dict[int, Vector]

    def __post_init__(self):
        if self.ambient_dim < 1:
            raise InputError("ambient_dim must be at least 1")
        for v in self.complex.vertices:
            if v not in self.coords:
                raise InputError(f"vertex {v} has no coordinates")
            if len(self.coords[v]) != self.ambient_dim:
                raise InputError(
                    f"vertex {v} has {len(self.coords[v])} coordinates, expected {self.ambient_dim}"
                )
        seen: dict[Vector, int] = {}
        for v in self.complex.vertices:
            p = self.coords[v]
            if p in seen:
                raise InputError(f"vertices {seen[p]} and {v} are embedded at the same point")
            seen[p] = v

    def __hash__(self):
        return hash((self.complex, self.ambient_dim, tuple(sorted(self.coords.items()))))

    @property
    def vertices(self) -> tuple[int, ...]:
        return self.complex.vertices

    def point(self, v: int) -> Vector:
        return self.coords[v]


def embed(maximal_simplices, coords: dict[int, Sequence], ambient_dim: int | None = None) -> GeometricComplex:
    """Convenience constructor; coordinates may be ints, Fractions or rational strings."""
    k = build_complex(maximal_simplices)
    pts = {
        v: tuple(c if isinstance(c, Fraction) else parse_rational(c) for c in p)
        for v, p in coords.items()
    }
    if ambient_dim is None:
        ambient_dim = len(next(iter(pts.values())))
    return GeometricComplex(k, ambient_dim, pts)


def dot(a: Sequence[Fraction], b: Sequence[Fraction]) -> Fraction:
    return sum((x * y for x, y in zip(a, b)), Fraction(0))


def height(gc: GeometricComplex, mu: Sequence[Fraction], v: int) -> Fraction:
    """Exact inner product of the direction with the embedded vertex."""
    if len(mu) != gc.ambient_dim:
        raise InputError(f"direction has length {len(mu)}, expected {gc.ambient_dim}")
    if v not in gc.coords:
        raise InputError(f"unknown vertex {v}")
    return dot(mu, gc.coords[v])


def affine_dim(gc: GeometricComplex, S: Iterable[int]) -> int:
    S = list(S)
    if not S:
        raise InputError("affine hull of the empty set")
    base = gc.point(S[0])
    diffs = [[a - b for a, b in zip(gc.point(v), base)] for v in S[1:]]
    return rank(diffs) if diffs else 0


def specialization_leq(phi: GeometricComplex, psi: GeometricComplex) -> bool:
    """True iff every vertex subset spans an affine hull under `phi` no larger
    than under `psi`.  Exhaustive over all 2^n - 1 subsets."""
    if phi.complex != psi.complex:
        raise InputError("embeddings of different complexes are not comparable")
    if phi.ambient_dim != psi.ambient_dim:
        raise InputError("embeddings live in different ambient dimensions")
    verts = phi.vertices
    for k in range(2, len(verts) + 1):
        for S in combinations(verts, k):
            if affine_dim(phi, S) > affine_dim(psi, S):
                return False
    return True

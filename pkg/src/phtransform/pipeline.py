"""Combinatorial persistence over finite chains: intervals, birth-death
ranks over GF(p), Mobius inversion, and the three morphism axioms."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from functools import lru_cache

from .complex import Simplex, SimplicialComplex
from .errors import InputError
from .filtration import BoundedMonotoneMap, Chain, Filtration
from .linalg import is_prime, kernel_basis_mod_p, rank_mod_p

log = logging.getLogger(__name__)

Interval = tuple[int, int]


@dataclass(frozen=True)
class FieldConfig:
    characteristic: int = 2

    def __post_init__(self):
        if not is_prime(self.characteristic):
            raise InputError(f"field characteristic {self.characteristic} is not prime")


@dataclass(frozen=True)
class IntervalPoset:
    base: Chain
    intervals: tuple[Interval, ...] = field(init=False)

    def __post_init__(self):
        m = len(self.base)
        # lexicographic order is a linear extension of the product order
        object.__setattr__(self, "intervals", tuple((a, b) for a in range(m) for b in range(a, m)))

    def __len__(self) -> int:
        return len(self.intervals)

    @staticmethod
    def leq(I: Interval, J: Interval) -> bool:
        return I[0] <= J[0] and I[1] <= J[1]

    @property
    def bottom(self) -> Interval:
        return (0, 0)

    @property
    def top(self) -> Interval:
        return (self.base.top, self.base.top)

    def covers(self) -> list[tuple[Interval, Interval]]:
        out = []
        for a, b in self.intervals:
            if a + 1 <= b:
                out.append(((a, b), (a + 1, b)))
            if b + 1 < len(self.base):
                out.append(((a, b), (a, b + 1)))
        return out


def interval_poset(P: Chain) -> IntervalPoset:
    return IntervalPoset(P)


@dataclass(frozen=True)
class MonotoneIntegralFunction:
    domain: IntervalPoset
    values: dict[Interval, int]

    def __call__(self, I: Interval) -> int:
        return self.values[I]

    def is_monotone(self) -> bool:
        return all(self.values[I] <= self.values[J] for I, J in self.domain.covers())


@dataclass(frozen=True)
class IntegralFunction:
    """A combinatorial persistence diagram; zero charges are not stored."""

    domain: IntervalPoset
    charges: dict[Interval, int]

    def __post_init__(self):
        object.__setattr__(self, "charges", {I: c for I, c in sorted(self.charges.items()) if c})

    def __call__(self, I: Interval) -> int:
        return self.charges.get(I, 0)

    def __eq__(self, other) -> bool:
        return (
            isinstance(other, IntegralFunction)
            and len(self.domain) == len(other.domain)
            and self.charges == other.charges
        )


def induced_interval_map(alpha: BoundedMonotoneMap) -> dict[Interval, Interval]:
    return {(a, b): (alpha(a), alpha(b)) for a, b in IntervalPoset(alpha.source).intervals}


def boundary_rows(K: SimplicialComplex, simplices, d: int, p: int) -> list[list[int]]:
    """Boundary vectors of the given d-simplices in the basis of K's (d-1)-simplices."""
    faces = {s: i for i, s in enumerate(K.of_dim(d - 1))}
    rows = []
    for s in simplices:
        row = [0] * len(faces)
        for i in range(len(s)):
            row[faces[s[:i] + s[i + 1:]]] = (-1) ** i % p
        rows.append(row)
    return rows


@lru_cache(maxsize=4096)
def _cycles(K: SimplicialComplex, stage: frozenset[Simplex], d: int, p: int) -> tuple[tuple[int, ...], ...]:
    """Basis of Z_d(stage), written in the basis of all d-simplices of K."""
    basis = K.of_dim(d)
    here = [s for s in basis if s in stage]
    if not here:
        return ()
    if d == 0:
        kernel = [[int(i == j) for j in range(len(here))] for i in range(len(here))]
    else:
        rows = boundary_rows(K, here, d, p)
        # kernel of the boundary map = null space of its transpose's row system
        cols = [list(c) for c in zip(*rows)]
        kernel = kernel_basis_mod_p(cols, len(here), p)
    pos = {s: i for i, s in enumerate(basis)}
    out = []
    for v in kernel:
        full = [0] * len(basis)
        for s, x in zip(here, v):
            full[pos[s]] = x
        out.append(tuple(full))
    return tuple(out)


@lru_cache(maxsize=4096)
def _boundaries(K: SimplicialComplex, stage: frozenset[Simplex], d: int, p: int) -> tuple[tuple[int, ...], ...]:
    """Spanning set of B_d(stage) in the basis of all d-simplices of K."""
    higher = [s for s in K.of_dim(d + 1) if s in stage]
    return tuple(tuple(r) for r in boundary_rows(K, higher, d + 1, p))


def cycle_space_dim(K: SimplicialComplex, d: int, field: FieldConfig = FieldConfig(), stage=None) -> int:
    stage = K.simplices if stage is None else frozenset(stage)
    return len(_cycles(K, stage, d, field.characteristic))


def birth_death(F: Filtration, d: int, field: FieldConfig = FieldConfig()) -> MonotoneIntegralFunction:
    p = field.characteristic
    K = F.complex
    dom = IntervalPoset(F.poset)
    top = F.poset.top
    values = {}
    for a, b in dom.intervals:
        Z = _cycles(K, F.stages[a], d, p)
        if b == top:
            values[(a, b)] = len(Z)
            continue
        B = _boundaries(K, F.stages[b], d, p)
        if not Z or not B:
            values[(a, b)] = 0
            continue
        rb = rank_mod_p(B, p)
        values[(a, b)] = len(Z) + rb - rank_mod_p(list(Z) + list(B), p)
    return MonotoneIntegralFunction(dom, values)


def _domain_check(m: int, chain: Chain):
    if m != len(chain):
        raise InputError("function domain does not match the map")


def is_monotone_preserving(f: MonotoneIntegralFunction, g: MonotoneIntegralFunction, alpha: BoundedMonotoneMap) -> bool:
    _domain_check(len(f.domain.base), alpha.source)
    _domain_check(len(g.domain.base), alpha.target)
    return all(g((a, b)) == f((alpha.star(a), alpha.star(b))) for a, b in g.domain.intervals)


def mobius_invert(f: MonotoneIntegralFunction) -> IntegralFunction:
    sigma: dict[Interval, int] = {}
    done: list[Interval] = []
    for J in f.domain.intervals:
        sigma[J] = f(J) - sum(sigma[I] for I in done if IntervalPoset.leq(I, J))
        done.append(J)
    return IntegralFunction(f.domain, sigma)


def push_charges(f: IntegralFunction, alpha: BoundedMonotoneMap) -> IntegralFunction:
    _domain_check(len(f.domain.base), alpha.source)
    g: dict[Interval, int] = {}
    for (a, b), c in f.charges.items():
        I = (alpha(a), alpha(b))
        g[I] = g.get(I, 0) + c
    return IntegralFunction(IntervalPoset(alpha.target), g)


def is_charge_preserving(sigma: IntegralFunction, tau: IntegralFunction, alpha: BoundedMonotoneMap) -> bool:
    _domain_check(len(tau.domain.base), alpha.target)
    return push_charges(sigma, alpha).charges == tau.charges


def persistent_homology(F: Filtration, d: int, field: FieldConfig = FieldConfig()) -> IntegralFunction:
    return mobius_invert(birth_death(F, d, field))


def total_charge(sigma: IntegralFunction) -> int:
    return sum(sigma.charges.values())

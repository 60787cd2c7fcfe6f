"""Per-cell chains P_C, height filtrations, and the face-relation maps between them."""

from __future__ import annotations

from dataclasses import dataclass
from typing import Hashable, Sequence

from .arrangement import Cell
from .complex import GeometricComplex, Simplex, SimplicialComplex
from .errors import InputError

TOP = "TOP"


@dataclass(frozen=True)
class Chain:
    """A finite totally ordered poset; element i is below element i+1."""

    elements: tuple[Hashable, ...]

    def __post_init__(self):
        if not self.elements:
            raise InputError("a chain needs at least one element")

    def __len__(self) -> int:
        return len(self.elements)

    def index(self, x) -> int:
        return self.elements.index(x)

    @property
    def top(self) -> int:
        return len(self.elements) - 1


@dataclass(frozen=True)
class Filtration:
    poset: Chain
    stages: tuple[frozenset[Simplex], ...]
    complex: SimplicialComplex

    def __post_init__(self):
        if len(self.stages) != len(self.poset):
            raise InputError("one stage per poset element is required")
        if self.stages[-1] != self.complex.simplices:
            raise InputError("the top stage must be the whole complex")
        for lo, hi in zip(self.stages, self.stages[1:]):
            if not lo <= hi:
                raise InputError("filtration stages must be nested")
        for st in self.stages:
            for s in st:
                if len(s) > 1 and any(s[:i] + s[i + 1:] not in st for i in range(len(s))):
                    raise InputError(f"stage is not a subcomplex: missing a face of {s}")


@dataclass(frozen=True)
class BoundedMonotoneMap:
    source: Chain
    target: Chain
    assignment: tuple[int, ...]

    def __post_init__(self):
        a = self.assignment
        if len(a) != len(self.source):
            raise InputError("assignment must cover the whole source chain")
        if any(not 0 <= x < len(self.target) for x in a):
            raise InputError("assignment leaves the target chain")
        if a[0] != 0 or a[-1] != self.target.top:
            raise InputError("map is not bounded")
        if any(x > y for x, y in zip(a, a[1:])):
            raise InputError("map is not monotone")

    def __call__(self, i: int) -> int:
        return self.assignment[i]

    def star(self, a: int) -> int:
        """max alpha^{-1}[bottom, a]"""
        return max(i for i, x in enumerate(self.assignment) if x <= a)

    @classmethod
    def identity(cls, chain: Chain) -> BoundedMonotoneMap:
        return cls(chain, chain, tuple(range(len(chain))))


def cell_poset(cell: Cell) -> Chain:
    return Chain(tuple(cell.partition) + (TOP,))


def filtration_from_partition(K: SimplicialComplex, partition: Sequence[Sequence[int]]) -> Filtration:
    """Each simplex enters at the highest block among its vertices."""
    level = {v: i for i, b in enumerate(partition) for v in b}
    stages = []
    for i in range(len(partition)):
        stages.append(frozenset(s for s in K.simplices if max(level[v] for v in s) <= i))
    stages.append(K.simplices)
    return Filtration(Chain(tuple(tuple(b) for b in partition) + (TOP,)), tuple(stages), K)


def cell_filtration(gc: GeometricComplex, cell: Cell) -> Filtration:
    return filtration_from_partition(gc.complex, cell.partition)


def face_map(child: Cell, parent: Cell) -> BoundedMonotoneMap:
    """alpha : P_parent -> P_child sending each block to the block containing it."""
    if not child.leq(parent):
        raise InputError(f"{child.sign} is not a face of {parent.sign}")
    assignment = []
    for block in parent.partition:
        target = child.block_of(block[0])
        if not set(block) <= set(child.partition[target]):
            raise InputError(f"block {block} of {parent.sign} is split in {child.sign}")
        assignment.append(target)
    assignment.append(len(child.partition))
    return BoundedMonotoneMap(cell_poset(parent), cell_poset(child), tuple(assignment))


def is_filtration_preserving(F: Filtration, G: Filtration, alpha: BoundedMonotoneMap) -> bool:
    if alpha.source != F.poset or alpha.target != G.poset:
        raise InputError("map does not run between the two filtrations' posets")
    return all(G.stages[a] == F.stages[alpha.star(a)] for a in range(len(G.poset)))


def compose_maps(alpha: BoundedMonotoneMap, beta: BoundedMonotoneMap) -> BoundedMonotoneMap:
    """alpha after beta."""
    if beta.target != alpha.source:
        raise InputError("maps are not composable")
    return BoundedMonotoneMap(beta.source, alpha.target, tuple(alpha(beta(i)) for i in range(len(beta.source))))

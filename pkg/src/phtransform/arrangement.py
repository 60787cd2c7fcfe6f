"""Great-sphere arrangement of a geometric complex and its cellulation.

A cell is identified by its sign vector: one symbol of "-0+" per vertex
pair (i, j), i < j, giving the sign of <mu, phi(v_j) - phi(v_i)>, followed
by one symbol per augmentation normal.  Cells are found by testing every
ordered partition of the vertex set for realizability.
"""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from itertools import combinations, product
from typing import Iterator, Sequence

from .complex import GeometricComplex, Vector, dot
from .errors import InputError, IntegrityError, NonEssentialError
from .feasibility import feasible_point
from .linalg import kernel_basis, rank

log = logging.getLogger(__name__)

Partition = tuple[tuple[int, ...], ...]
SIGNS = "-0+"


@dataclass(frozen=True)
class PairSet:
    pairs: tuple[tuple[int, int], ...]
    augmentation: tuple[Vector, ...] = ()

    @classmethod
    def of(cls, gc: GeometricComplex, augmentation: Sequence[Sequence[Fraction]] = ()) -> PairSet:
        return cls(
            tuple(combinations(gc.vertices, 2)),
            tuple(tuple(Fraction(x) for x in a) for a in augmentation),
        )

    def __len__(self) -> int:
        return len(self.pairs) + len(self.augmentation)

    def vectors(self, gc: GeometricComplex) -> list[Vector]:
        """Pair normals in order, then the augmentation normals."""
        nm = normals(gc)
        return [nm[e] for e in self.pairs] + list(self.augmentation)


def normals(gc: GeometricComplex) -> dict[tuple[int, int], Vector]:
    """n_(i,j) = phi(v_j) - phi(v_i) for every pair i < j."""
    return {
        (i, j): tuple(b - a for a, b in zip(gc.point(i), gc.point(j)))
        for i, j in combinations(gc.vertices, 2)
    }


def essential_defect(gc: GeometricComplex, augmentation: Sequence[Sequence[Fraction]] = ()) -> int:
    """Dimension of the common intersection of all great spheres; -1 when empty."""
    rows = list(normals(gc).values()) + [list(a) for a in augmentation]
    return gc.ambient_dim - rank(rows) - 1


def augment(gc: GeometricComplex) -> list[Vector]:
    """Canonical basis of the orthogonal complement of the pair normals."""
    k = essential_defect(gc)
    if k < 0:
        raise InputError("arrangement is already essential; nothing to augment")
    basis = kernel_basis(list(normals(gc).values()), gc.ambient_dim)
    assert len(basis) == k + 1
    return [tuple(v) for v in basis]


def _sign(x: Fraction) -> str:
    return "+" if x > 0 else "-" if x < 0 else "0"


def sign_vector(gc: GeometricComplex, pairs: PairSet, mu: Sequence[Fraction]) -> str:
    if len(mu) != gc.ambient_dim:
        raise InputError(f"direction has length {len(mu)}, expected {gc.ambient_dim}")
    if not any(mu):
        raise InputError("zero direction")
    return "".join(_sign(dot(mu, n)) for n in pairs.vectors(gc))


def height_partition(gc: GeometricComplex, mu: Sequence[Fraction]) -> Partition:
    """Vertices grouped by equal height, lowest block first."""
    by_height: dict[Fraction, list[int]] = {}
    for v in gc.vertices:
        by_height.setdefault(dot(mu, gc.point(v)), []).append(v)
    return tuple(tuple(sorted(by_height[h])) for h in sorted(by_height))


def realizable(
    gc: GeometricComplex,
    pairs: PairSet,
    partition: Partition,
    aug_signs: str = "",
) -> tuple[Fraction, ...] | None:
    """A rational direction realizing the ordered partition (and the given
    augmentation signs), or None if no such direction exists."""
    if sorted(v for b in partition for v in b) != sorted(gc.vertices):
        raise InputError(f"{partition!r} does not partition the vertex set")
    if len(aug_signs) != len(pairs.augmentation):
        raise InputError("one augmentation sign per augmentation normal is required")
    D = gc.ambient_dim
    pt = gc.point
    eq = [
        [a - b for a, b in zip(pt(u), pt(block[0]))]
        for block in partition
        for u in block[1:]
    ]
    eq += [list(n) for n, s in zip(pairs.augmentation, aug_signs) if s == "0"]
    W = kernel_basis(eq, D)
    if not W:
        return None
    strict = [
        tuple(b - a for a, b in zip(pt(lo[0]), pt(hi[0])))
        for lo, hi in zip(partition, partition[1:])
    ]
    strict += [
        tuple(x if s == "+" else -x for x in n)
        for n, s in zip(pairs.augmentation, aug_signs)
        if s != "0"
    ]
    if not strict:
        y = [Fraction(1)] + [Fraction(0)] * (len(W) - 1)
    else:
        A = [[dot(w, d) for w in W] for d in strict]
        y = feasible_point(A, [Fraction(1)] * len(A))
        if y is None:
            return None
    return tuple(sum((c * w[i] for c, w in zip(y, W)), Fraction(0)) for i in range(D))


def ordered_partitions(items: Sequence[int]) -> Iterator[Partition]:
    """All ordered set partitions (Fubini many), blocks sorted internally."""
    items = tuple(items)
    if not items:
        yield ()
        return
    first, rest = items[0], items[1:]
    # choose the block holding `first`, then place it among the ordered rest
    for k in range(len(rest) + 1):
        for others in combinations(rest, k):
            block = tuple(sorted((first,) + others))
            remaining = tuple(x for x in rest if x not in others)
            for tail in ordered_partitions(remaining):
                for pos in range(len(tail) + 1):
                    yield tail[:pos] + (block,) + tail[pos:]


@dataclass(frozen=True)
class Cell:
    sign: str
    partition: Partition
    dim: int
    witness: tuple[Fraction, ...]

    def leq(self, other: Cell) -> bool:
        """Face relation: every nonzero entry of self agrees with other."""
        return all(a == "0" or a == b for a, b in zip(self.sign, other.sign))

    def block_of(self, v: int) -> int:
        for i, b in enumerate(self.partition):
            if v in b:
                return i
        raise KeyError(v)


def cell_dim(gc: GeometricComplex, pairs: PairSet, sign: str) -> int:
    zero_rows = [list(n) for n, s in zip(pairs.vectors(gc), sign) if s == "0"]
    return gc.ambient_dim - rank(zero_rows) - 1 if zero_rows else gc.ambient_dim - 1


@dataclass
class Cellulation:
    cells: list[Cell]
    face_relation: list[tuple[int, int]]
    sign_index: dict[str, int] = field(default_factory=dict)

    def __post_init__(self):
        if not self.sign_index:
            self.sign_index = {c.sign: i for i, c in enumerate(self.cells)}

    def __len__(self) -> int:
        return len(self.cells)

    def leq(self, i: int, j: int) -> bool:
        return self.cells[i].leq(self.cells[j])

    def counts(self) -> dict[int, int]:
        out: dict[int, int] = {}
        for c in self.cells:
            out[c.dim] = out.get(c.dim, 0) + 1
        return dict(sorted(out.items()))

    def euler_characteristic(self) -> int:
        return sum((-1) ** c.dim for c in self.cells)

    def faces(self, j: int) -> list[int]:
        return [i for i in range(len(self.cells)) if self.leq(i, j)]

    def cofaces(self, i: int, dim: int | None = None) -> list[int]:
        return [
            j for j, c in enumerate(self.cells)
            if self.leq(i, j) and (dim is None or c.dim == dim)
        ]


def _masks(sign: str) -> tuple[int, int]:
    plus = minus = 0
    for k, s in enumerate(sign):
        if s == "+":
            plus |= 1 << k
        elif s == "-":
            minus |= 1 << k
    return plus, minus


def covering_pairs(cells: Sequence[Cell]) -> list[tuple[int, int]]:
    """(child, parent) pairs of the face relation with dimension gap one.

    The face poset of a regular cell complex is graded by dimension, so
    these are exactly the covering relations.
    """
    masks = [_masks(c.sign) for c in cells]
    by_dim: dict[int, list[int]] = {}
    for i, c in enumerate(cells):
        by_dim.setdefault(c.dim, []).append(i)
    out = []
    for d, lows in by_dim.items():
        for i in lows:
            pi, mi = masks[i]
            for j in by_dim.get(d + 1, ()):
                pj, mj = masks[j]
                if pi & ~pj == 0 and mi & ~mj == 0:
                    out.append((i, j))
    return sorted(out)


def enumerate_cells(gc: GeometricComplex, pairs: PairSet) -> Cellulation:
    k = essential_defect(gc, pairs.augmentation)
    if k >= 0:
        raise NonEssentialError(k)
    cells: list[Cell] = []
    n_aug = len(pairs.augmentation)
    for part in ordered_partitions(gc.vertices):
        for aug in product(SIGNS, repeat=n_aug):
            aug_signs = "".join(aug)
            mu = realizable(gc, pairs, part, aug_signs)
            if mu is None:
                continue
            sign = sign_vector(gc, pairs, mu)
            if height_partition(gc, mu) != part or sign[len(pairs.pairs):] != aug_signs:
                raise IntegrityError(f"witness {mu} does not realize {part} / {aug_signs}")
            cells.append(Cell(sign, part, cell_dim(gc, pairs, sign), mu))
    cells.sort(key=lambda c: c.sign)
    if len({c.sign for c in cells}) != len(cells):
        raise IntegrityError("two cells share a sign vector")
    log.debug("enumerated %d cells", len(cells))
    return Cellulation(cells, covering_pairs(cells))


def cell_of(cellulation: Cellulation, gc: GeometricComplex, pairs: PairSet, mu) -> Cell:
    s = sign_vector(gc, pairs, mu)
    try:
        return cellulation.cells[cellulation.sign_index[s]]
    except KeyError:
        raise IntegrityError(f"direction {tuple(mu)} has sign vector {s}, which is not a cell") from None

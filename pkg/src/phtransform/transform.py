"""The combinatorial PH transform over a cellulation, its verification,
vineyard graph, and a brute-force random-direction oracle."""

from __future__ import annotations

import logging
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Sequence

import networkx as nx
import numpy as np

from .arrangement import (
    Cellulation,
    PairSet,
    augment,
    enumerate_cells,
    essential_defect,
    height_partition,
    sign_vector,
)
from .complex import GeometricComplex, height
from .errors import NonEssentialError
from .filtration import (
    TOP,
    BoundedMonotoneMap,
    Chain,
    Filtration,
    cell_filtration,
    compose_maps,
    face_map,
    is_filtration_preserving,
)
from .pipeline import (
    FieldConfig,
    IntegralFunction,
    MonotoneIntegralFunction,
    birth_death,
    cycle_space_dim,
    is_charge_preserving,
    is_monotone_preserving,
    mobius_invert,
    persistent_homology,
    push_charges,
    total_charge,
)

log = logging.getLogger(__name__)


@dataclass
class Transform:
    gc: GeometricComplex
    pairs: PairSet
    cellulation: Cellulation
    dims: list[int]
    field: FieldConfig
    filtrations: list[Filtration]
    arrows: dict[tuple[int, int], BoundedMonotoneMap]
    diagrams: dict[tuple[int, int], IntegralFunction] = field(default_factory=dict)
    birth_death: dict[tuple[int, int], MonotoneIntegralFunction] = field(default_factory=dict)

    @property
    def cells(self):
        return self.cellulation.cells


def build_pairs(gc: GeometricComplex, allow_augment: bool = False) -> PairSet:
    k = essential_defect(gc)
    if k < 0:
        return PairSet.of(gc)
    if not allow_augment:
        raise NonEssentialError(k)
    return PairSet.of(gc, augment(gc))


def compute_transform(
    gc: GeometricComplex,
    dims: Sequence[int] = (0,),
    field: FieldConfig = FieldConfig(),
    augment: bool = False,
    pairs: PairSet | None = None,
) -> Transform:
    pairs = pairs if pairs is not None else build_pairs(gc, augment)
    cellulation = enumerate_cells(gc, pairs)
    return assemble(gc, pairs, cellulation, dims, field)


def assemble(gc, pairs, cellulation, dims, field, arrows=None, diagrams=None) -> Transform:
    """Fill in filtrations, birth-death functions and (unless given) arrows and diagrams."""
    cells = cellulation.cells
    filtrations = [cell_filtration(gc, c) for c in cells]
    if arrows is None:
        arrows = {(i, j): face_map(cells[i], cells[j]) for i, j in cellulation.face_relation}
    bd = {
        (i, d): birth_death(F, d, field)
        for i, F in enumerate(filtrations)
        for d in dims
    }
    if diagrams is None:
        diagrams = {key: mobius_invert(f) for key, f in bd.items()}
    return Transform(gc, pairs, cellulation, sorted(dims), field, filtrations, arrows, diagrams, bd)


@dataclass
class VerificationReport:
    checks: dict[str, list[str]]

    @property
    def ok(self) -> bool:
        return not any(self.checks.values())

    def lines(self) -> list[str]:
        out = []
        for name, failures in self.checks.items():
            out.append(f"{'PASS' if not failures else 'FAIL'} {name}" + (f" ({len(failures)} failures)" if failures else ""))
            out.extend(f"    {msg}" for msg in failures[:20])
        return out


def _label(I, chain_len: int) -> str:
    def end(x):
        return "T" if x == chain_len - 1 else str(x + 1)
    return f"[{end(I[0])},{end(I[1])}]"


def verify_transform(T: Transform) -> VerificationReport:
    cells = T.cells
    checks: dict[str, list[str]] = {
        "filtration_preserving": [],
        "monotone_preserving": [],
        "charge_preserving": [],
        "composition": [],
        "total_charge_constant": [],
        "diagram_is_mobius_inversion": [],
    }
    for (i, j), alpha in sorted(T.arrows.items()):
        where = f"{cells[i].sign} <= {cells[j].sign}"
        try:
            ok = is_filtration_preserving(T.filtrations[j], T.filtrations[i], alpha)
        except ValueError as exc:
            ok = False
            where += f": {exc}"
        if not ok:
            checks["filtration_preserving"].append(where)
            continue
        for d in T.dims:
            if not is_monotone_preserving(T.birth_death[j, d], T.birth_death[i, d], alpha):
                checks["monotone_preserving"].append(f"d={d} {where}")
            pushed = push_charges(T.diagrams[j, d], alpha)
            target = T.diagrams[i, d]
            if pushed.charges != target.charges:
                n = len(alpha.target)
                bad = sorted(set(pushed.charges) ^ set(target.charges) | {
                    I for I in pushed.charges if pushed(I) != target(I)
                })
                checks["charge_preserving"].append(
                    f"d={d} {where}: intervals {', '.join(_label(I, n) for I in bad)} of cell {cells[i].sign}"
                )
    children: dict[int, list[int]] = {}
    for i, j in T.arrows:
        children.setdefault(j, []).append(i)
    for (j, k), beta in sorted(T.arrows.items()):
        for i in children.get(j, ()):
            alpha = T.arrows[i, j]
            composite = compose_maps(alpha, beta)
            where = f"{cells[i].sign} <= {cells[j].sign} <= {cells[k].sign}"
            if composite != face_map(cells[i], cells[k]):
                checks["composition"].append(where)
                continue
            for d in T.dims:
                twice = push_charges(push_charges(T.diagrams[k, d], beta), alpha)
                if twice != push_charges(T.diagrams[k, d], composite):
                    checks["composition"].append(f"d={d} {where}")
    for d in T.dims:
        expected = cycle_space_dim(T.gc.complex, d, T.field)
        for i, c in enumerate(cells):
            tc = total_charge(T.diagrams[i, d])
            if tc != expected:
                checks["total_charge_constant"].append(f"d={d} cell {c.sign}: total {tc}, expected {expected}")
            if mobius_invert(T.birth_death[i, d]) != T.diagrams[i, d]:
                checks["diagram_is_mobius_inversion"].append(f"d={d} cell {c.sign}")
    return VerificationReport(checks)


@dataclass
class Component:
    nodes: list[tuple[int, tuple[int, int]]]
    charges: list[int]
    cell_totals: list[int]

    @property
    def single_charge(self) -> bool:
        return len(self.charges) == 1

    @property
    def conserved(self) -> bool:
        return len(self.cell_totals) == 1


@dataclass
class VineyardGraph:
    dim: int
    graph: nx.Graph
    components: list[Component]

    @property
    def multi_charge(self) -> list[Component]:
        return [c for c in self.components if not c.single_charge]


def vineyard(T: Transform, d: int) -> VineyardGraph:
    """Charged intervals as nodes; an edge joins (C2, J) to (C1, alpha(J))
    along every covering relation C1 < C2 when both carry charge."""
    if d not in T.dims:
        raise ValueError(f"dimension {d} was not computed")
    g = nx.Graph()
    for i in range(len(T.cells)):
        for I, c in T.diagrams[i, d].charges.items():
            g.add_node((i, I), charge=c)
    for (i, j), alpha in sorted(T.arrows.items()):
        for (a, b) in T.diagrams[j, d].charges:
            target = (i, (alpha(a), alpha(b)))
            if target in g:
                g.add_edge((j, (a, b)), target)
    comps = []
    for nodes in nx.connected_components(g):
        nodes = sorted(nodes)
        per_cell: dict[int, int] = {}
        for i, I in nodes:
            per_cell[i] = per_cell.get(i, 0) + g.nodes[i, I]["charge"]
        comps.append(Component(
            nodes,
            sorted({g.nodes[n]["charge"] for n in nodes}),
            sorted(set(per_cell.values())),
        ))
    comps.sort(key=lambda c: c.nodes[0])
    for c in comps:
        if not c.single_charge:
            log.warning(
                "vineyard component through cell %s carries charges %s",
                T.cells[c.nodes[0][0]].sign, c.charges,
            )
    return VineyardGraph(d, g, comps)


@dataclass
class OracleReport:
    trials: int
    found: int = 0
    partition_matches: int = 0
    diagram_matches: int = 0
    mismatches: list[str] = field(default_factory=list)

    @property
    def ok(self) -> bool:
        return not self.mismatches


def random_direction(rng: np.random.Generator, dim: int, bound: int) -> tuple[Fraction, ...]:
    while True:
        mu = tuple(Fraction(int(x)) for x in rng.integers(-bound, bound + 1, size=dim))
        if any(mu):
            return mu


def check_direction(gc: GeometricComplex, T: Transform, mu, report: OracleReport) -> None:
    s = sign_vector(gc, T.pairs, mu)
    idx = T.cellulation.sign_index.get(s)
    if idx is None:
        report.mismatches.append(f"{mu}: sign vector {s} is not a cell")
        return
    report.found += 1
    part = height_partition(gc, mu)
    if part != T.cells[idx].partition:
        report.mismatches.append(f"{mu}: partition {part} differs from cell {s}")
        return
    report.partition_matches += 1
    F = sublevel_filtration(gc, mu)
    for d in T.dims:
        if persistent_homology(F, d, T.field) != T.diagrams[idx, d]:
            report.mismatches.append(f"{mu}: PH_{d} differs from cell {s}")
            return
    report.diagram_matches += 1


def sublevel_filtration(gc: GeometricComplex, mu) -> Filtration:
    """Filtration by sublevel sets of the height function, built from raw heights."""
    h = {v: height(gc, mu, v) for v in gc.vertices}
    levels = sorted(set(h.values()))
    K = gc.complex
    stages = [frozenset(s for s in K.simplices if max(h[v] for v in s) <= t) for t in levels]
    blocks = tuple(tuple(v for v in gc.vertices if h[v] == t) for t in levels)
    return Filtration(Chain(blocks + (TOP,)), tuple(stages) + (K.simplices,), K)


def oracle_sample_check(gc: GeometricComplex, T: Transform, trials: int, seed: int, bound: int = 1000) -> OracleReport:
    """Sample integer directions and compare against the stored transform."""
    rng = np.random.default_rng(seed)
    report = OracleReport(trials)
    for _ in range(trials):
        check_direction(gc, T, random_direction(rng, gc.ambient_dim, bound), report)
    return report

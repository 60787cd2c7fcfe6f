"""JSON complex files and transform files.

Rationals are always written as strings ("p" or "p/q"); no floats appear in
either format.  Field order is fixed so output is byte-for-byte reproducible.
"""

from __future__ import annotations

import json
from pathlib import Path
from typing import Any

from .arrangement import Cell, Cellulation, PairSet
from .complex import GeometricComplex, build_complex, format_rational, parse_rational
from .errors import InputError
from .filtration import TOP, BoundedMonotoneMap, cell_poset
from .pipeline import FieldConfig, IntegralFunction, IntervalPoset
from .transform import Transform, assemble

FORMAT = "phtransform/1"


def _load_json(text: str, source: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise InputError(f"{source}: line {exc.lineno}, column {exc.colno}: {exc.msg}") from None


def _need(obj: dict, key: str, kind, where: str):
    if not isinstance(obj, dict) or key not in obj:
        raise InputError(f"{where}: missing field {key!r}")
    val = obj[key]
    if not isinstance(val, kind) or isinstance(val, bool):
        raise InputError(f"{where}.{key}: expected {kind.__name__ if isinstance(kind, type) else kind}")
    return val


def complex_from_dict(doc: dict, where: str = "complex") -> GeometricComplex:
    ambient = _need(doc, "ambient_dim", int, where)
    vertices = _need(doc, "vertices", list, where)
    coords = {}
    for k, v in enumerate(vertices):
        w = f"{where}.vertices[{k}]"
        vid = _need(v, "id", int, w)
        raw = _need(v, "coords", list, w)
        if vid in coords:
            raise InputError(f"{w}: duplicate id {vid}")
        try:
            coords[vid] = tuple(parse_rational(c) for c in raw)
        except InputError as exc:
            raise InputError(f"{w}.coords: {exc}") from None
    maximal = _need(doc, "maximal_simplices", list, where)
    for k, smp in enumerate(maximal):
        if not isinstance(smp, list) or not smp or not all(isinstance(x, int) and not isinstance(x, bool) for x in smp):
            raise InputError(f"{where}.maximal_simplices[{k}]: expected a nonempty list of vertex ids")
    used = {x for s in maximal for x in s}
    unknown = used - set(coords)
    if unknown:
        raise InputError(f"{where}.maximal_simplices: unknown vertex ids {sorted(unknown)}")
    lonely = [[v] for v in coords if v not in used]
    K = build_complex([list(s) for s in maximal] + lonely)
    return GeometricComplex(K, ambient, coords)


def complex_to_dict(gc: GeometricComplex) -> dict:
    return {
        "ambient_dim": gc.ambient_dim,
        "vertices": [
            {"id": v, "coords": [format_rational(x) for x in gc.point(v)]}
            for v in gc.vertices
        ],
        "maximal_simplices": [list(s) for s in gc.complex.maximal()],
    }


def read_complex(path: str | Path) -> GeometricComplex:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    return complex_from_dict(_load_json(text, str(path)), str(path))


def block_label(block) -> str:
    return ",".join(f"v{v + 1}" for v in block)


def transform_to_dict(T: Transform, with_diagrams: bool = True) -> dict:
    cells = T.cells
    doc: dict[str, Any] = {
        "format": FORMAT,
        "input": complex_to_dict(T.gc),
        "field": T.field.characteristic,
        "dims": list(T.dims) if with_diagrams else [],
        "pairs": [list(e) for e in T.pairs.pairs],
        "augmented_normals": [[format_rational(x) for x in a] for a in T.pairs.augmentation],
        "cells": [
            {
                "sign": c.sign,
                "dim": c.dim,
                "partition": [list(b) for b in c.partition],
                "witness": [format_rational(x) for x in c.witness],
                "poset": [block_label(b) for b in c.partition] + [TOP],
            }
            for c in cells
        ],
        "face_relations": [list(r) for r in T.cellulation.face_relation],
        "arrows": [
            {"child": i, "parent": j, "map": list(alpha.assignment)}
            for (i, j), alpha in sorted(T.arrows.items())
        ],
        "diagrams": {},
    }
    if with_diagrams:
        for d in T.dims:
            doc["diagrams"][str(d)] = [
                [{"interval": list(I), "charge": c} for I, c in T.diagrams[i, d].charges.items()]
                for i in range(len(cells))
            ]
    return doc


def dumps(T: Transform, with_diagrams: bool = True) -> str:
    return json.dumps(transform_to_dict(T, with_diagrams), indent=1) + "\n"


def transform_from_dict(doc: dict, where: str = "transform") -> Transform:
    if not isinstance(doc, dict) or doc.get("format") != FORMAT:
        raise InputError(f"{where}: not a {FORMAT} transform file")
    gc = complex_from_dict(_need(doc, "input", dict, where), f"{where}.input")
    field = FieldConfig(_need(doc, "field", int, where))
    dims = _need(doc, "dims", list, where)
    if not all(isinstance(d, int) and not isinstance(d, bool) and d >= 0 for d in dims):
        raise InputError(f"{where}.dims: expected nonnegative integers")
    aug = [
        tuple(parse_rational(x) for x in a)
        for a in _need(doc, "augmented_normals", list, where)
    ]
    pairs = PairSet.of(gc, aug)
    if [list(e) for e in pairs.pairs] != _need(doc, "pairs", list, where):
        raise InputError(f"{where}.pairs: does not match the vertex set")
    cells = []
    for k, c in enumerate(_need(doc, "cells", list, where)):
        w = f"{where}.cells[{k}]"
        sign = _need(c, "sign", str, w)
        if len(sign) != len(pairs) or set(sign) - set("-0+"):
            raise InputError(f"{w}.sign: malformed sign string {sign!r}")
        cells.append(Cell(
            sign,
            tuple(tuple(b) for b in _need(c, "partition", list, w)),
            _need(c, "dim", int, w),
            tuple(parse_rational(x) for x in _need(c, "witness", list, w)),
        ))
    relations = [tuple(r) for r in _need(doc, "face_relations", list, where)]
    for r in relations:
        if len(r) != 2 or not all(isinstance(x, int) and 0 <= x < len(cells) for x in r):
            raise InputError(f"{where}.face_relations: bad entry {list(r)}")
    cellulation = Cellulation(cells, relations)
    arrows = {}
    for k, a in enumerate(_need(doc, "arrows", list, where)):
        w = f"{where}.arrows[{k}]"
        i, j = _need(a, "child", int, w), _need(a, "parent", int, w)
        if not (0 <= i < len(cells) and 0 <= j < len(cells)):
            raise InputError(f"{w}: cell index out of range")
        try:
            arrows[i, j] = BoundedMonotoneMap(
                cell_poset(cells[j]), cell_poset(cells[i]), tuple(_need(a, "map", list, w))
            )
        except InputError as exc:
            raise InputError(f"{w}.map: {exc}") from None
    diagrams = {}
    raw = _need(doc, "diagrams", dict, where)
    for d in dims:
        per_cell = raw.get(str(d))
        if not isinstance(per_cell, list) or len(per_cell) != len(cells):
            raise InputError(f"{where}.diagrams.{d}: expected one entry per cell")
        for i, entries in enumerate(per_cell):
            dom = IntervalPoset(cell_poset(cells[i]))
            charges = {}
            for e in entries:
                I = tuple(_need(e, "interval", list, f"{where}.diagrams.{d}[{i}]"))
                if I not in dom.intervals:
                    raise InputError(f"{where}.diagrams.{d}[{i}]: interval {list(I)} outside the cell poset")
                charges[I] = _need(e, "charge", int, f"{where}.diagrams.{d}[{i}]")
            diagrams[i, d] = IntegralFunction(dom, charges)
    return assemble(gc, pairs, cellulation, dims, field, arrows=arrows, diagrams=diagrams)


def loads(text: str, source: str = "transform") -> Transform:
    return transform_from_dict(_load_json(text, source), source)


def read_transform(path: str | Path) -> Transform:
    path = Path(path)
    try:
        text = path.read_text()
    except OSError as exc:
        raise InputError(f"{path}: {exc.strerror}") from None
    return loads(text, str(path))

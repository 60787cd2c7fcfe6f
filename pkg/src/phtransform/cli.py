"""Command line interface.

Exit codes: 0 success, 1 verification or oracle failure, 2 input error.
"""

from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path

from . import io, viz
from .errors import InputError, NonEssentialError
from .pipeline import FieldConfig
from .transform import (
    assemble,
    build_pairs,
    compute_transform,
    oracle_sample_check,
    verify_transform,
    vineyard,
)
from .arrangement import enumerate_cells

log = logging.getLogger("phtransform")


def _write(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        Path(out).write_text(text)


def _dims(text: str) -> list[int]:
    try:
        dims = sorted({int(x) for x in text.split(",") if x.strip()})
    except ValueError:
        raise argparse.ArgumentTypeError(f"bad dimension list {text!r}") from None
    if not dims or dims[0] < 0:
        raise argparse.ArgumentTypeError("dimensions must be nonnegative")
    return dims


def _counts_line(cellulation) -> str:
    return ", ".join(f"{d}-cells: {n}" for d, n in cellulation.counts().items())


def cmd_cells(args) -> int:
    gc = io.read_complex(args.input)
    pairs = build_pairs(gc, args.augment)
    cellulation = enumerate_cells(gc, pairs)
    T = assemble(gc, pairs, cellulation, [], FieldConfig())
    print(_counts_line(cellulation))
    print(f"Euler characteristic: {cellulation.euler_characteristic()}")
    if args.output:
        _write(io.dumps(T, with_diagrams=False), args.output)
    return 0


def cmd_transform(args) -> int:
    gc = io.read_complex(args.input)
    T = compute_transform(gc, args.dims, FieldConfig(args.field), augment=args.augment)
    _write(io.dumps(T), args.output)
    if args.output and args.output != "-":
        print(f"{len(T.cells)} cells ({_counts_line(T.cellulation)}); dims {T.dims}; GF({args.field})")
    return 0


def cmd_verify(args) -> int:
    T = io.read_transform(args.transform)
    report = verify_transform(T)
    for line in report.lines():
        print(line)
    return 0 if report.ok else 1


def cmd_vineyard(args) -> int:
    T = io.read_transform(args.transform)
    vy = vineyard(T, args.dim)
    print(f"vineyard d={args.dim}: {vy.graph.number_of_nodes()} points, "
          f"{vy.graph.number_of_edges()} edges, {len(vy.components)} components")
    for k, comp in enumerate(vy.components, 1):
        cells = len({i for i, _ in comp.nodes})
        line = (f"component {k}: {len(comp.nodes)} points over {cells} cells, "
                f"charges {comp.charges}, per-cell total {comp.cell_totals}")
        if not comp.single_charge:
            line += "  WARNING: more than one charge value"
        print(line)
    if args.dot:
        _write(viz.vineyard_dot(T, vy), args.dot)
    return 0


def cmd_oracle(args) -> int:
    gc = io.read_complex(args.input)
    T = io.read_transform(args.transform)
    if io.complex_to_dict(gc) != io.complex_to_dict(T.gc):
        raise InputError(f"{args.input} is not the complex recorded in {args.transform}")
    report = oracle_sample_check(gc, T, args.trials, args.seed, args.bound)
    print(f"trials: {report.trials}, cells found: {report.found}, "
          f"partitions agree: {report.partition_matches}, diagrams agree: {report.diagram_matches}")
    for m in report.mismatches[:20]:
        print(f"MISMATCH {m}")
    return 0 if report.ok else 1


def cmd_svg(args) -> int:
    T = io.read_transform(args.transform)
    _write(viz.cellulation_svg(T), args.output)
    return 0


def cmd_poset(args) -> int:
    T = io.read_transform(args.transform)
    _write(viz.poset_dot(T, args.cell, args.intervals), args.output)
    return 0


def build_parser() -> argparse.ArgumentParser:
    p = argparse.ArgumentParser(prog="phtransform", description="Combinatorial persistent homology transform.")
    p.add_argument("-v", "--verbose", action="store_true")
    sub = p.add_subparsers(dest="command", required=True)

    s = sub.add_parser("cells", help="enumerate the cellulation of the direction sphere")
    s.add_argument("input")
    s.add_argument("--augment", action="store_true", help="add great spheres if the arrangement is not essential")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_cells)

    s = sub.add_parser("transform", help="compute the full transform file")
    s.add_argument("input")
    s.add_argument("--dims", type=_dims, default=[0, 1])
    s.add_argument("--field", type=int, default=2)
    s.add_argument("--augment", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_transform)

    s = sub.add_parser("verify", help="check every morphism axiom in a transform file")
    s.add_argument("transform")
    s.set_defaults(func=cmd_verify)

    s = sub.add_parser("vineyard", help="connected components of charged points")
    s.add_argument("transform")
    s.add_argument("--dim", type=int, required=True)
    s.add_argument("--dot")
    s.set_defaults(func=cmd_vineyard)

    s = sub.add_parser("oracle", help="compare random directions against a transform file")
    s.add_argument("input")
    s.add_argument("transform")
    s.add_argument("--trials", type=int, default=500)
    s.add_argument("--seed", type=int, default=0)
    s.add_argument("--bound", type=int, default=1000)
    s.set_defaults(func=cmd_oracle)

    s = sub.add_parser("svg", help="draw a cellulation of S^1")
    s.add_argument("transform")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_svg)

    s = sub.add_parser("poset", help="DOT of a cell's chain or its interval poset")
    s.add_argument("transform")
    s.add_argument("--cell", required=True)
    s.add_argument("--intervals", action="store_true")
    s.add_argument("-o", "--output")
    s.set_defaults(func=cmd_poset)
    return p


def main(argv=None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    logging.basicConfig(level=logging.DEBUG if args.verbose else logging.WARNING,
                        format="%(levelname)s %(name)s: %(message)s")
    try:
        return args.func(args)
    except (InputError, NonEssentialError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


if __name__ == "__main__":
    sys.exit(main())

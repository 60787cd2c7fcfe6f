"""Static emitters: SVG for cellulations of the circle, DOT for posets and vineyards."""

from __future__ import annotations

import math
from html import escape

from .errors import InputError
from .filtration import cell_poset
from .io import block_label
from .pipeline import IntervalPoset
from .transform import Transform, VineyardGraph


def _interval_label(I, n: int) -> str:
    def end(x):
        return "⊤" if x == n - 1 else str(x + 1)
    return f"[{end(I[0])},{end(I[1])}]"


def cellulation_svg(T: Transform, size: int = 420) -> str:
    """Circle of directions with every cell labeled by its sign string.

    Only the drawing uses floating point; positions come from the exact
    witness directions.
    """
    if T.gc.ambient_dim != 2:
        raise InputError("svg output needs a cellulation of S^1 (ambient_dim 2)")
    c = size / 2
    r = size * 0.32
    parts = [
        f'<svg xmlns="http://www.w3.org/2000/svg" width="{size}" height="{size}" '
        f'viewBox="0 0 {size} {size}" font-family="monospace" font-size="12">',
        f'<circle cx="{c}" cy="{c}" r="{r}" fill="none" stroke="black" stroke-width="2"/>',
    ]
    for cell in T.cells:
        x, y = (float(t) for t in cell.witness)
        theta = math.atan2(y, x)
        px, py = c + r * math.cos(theta), c - r * math.sin(theta)
        lx, ly = c + (r + 34) * math.cos(theta), c - (r + 34) * math.sin(theta)
        if cell.dim == 0:
            parts.append(f'<circle cx="{px:.2f}" cy="{py:.2f}" r="4" fill="black"/>')
        weight = "bold" if cell.dim == 1 else "normal"
        parts.append(
            f'<text x="{lx:.2f}" y="{ly:.2f}" text-anchor="middle" dominant-baseline="middle" '
            f'font-weight="{weight}">{escape(cell.sign)}</text>'
        )
    parts.append("</svg>")
    return "\n".join(parts) + "\n"


def _q(s: str) -> str:
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def poset_dot(T: Transform, sign: str, intervals: bool = False) -> str:
    idx = T.cellulation.sign_index.get(sign)
    if idx is None:
        raise InputError(f"no cell is labeled {sign!r}")
    chain = cell_poset(T.cells[idx])
    names = [block_label(b) for b in chain.elements[:-1]] + ["⊤"]
    lines = [f"digraph {_q('P_' + sign)} {{", "  rankdir=BT;"]
    if not intervals:
        for i, name in enumerate(names):
            lines.append(f"  n{i} [label={_q('[' + name + ']')}];")
        for i in range(len(names) - 1):
            lines.append(f"  n{i} -> n{i + 1};")
    else:
        dom = IntervalPoset(chain)
        for a, b in dom.intervals:
            label = _interval_label((a, b), len(chain))
            charges = [f"d{d}:{T.diagrams[idx, d]((a, b))}" for d in T.dims if T.diagrams[idx, d]((a, b))]
            if charges:
                label += " " + " ".join(charges)
            lines.append(f"  i{a}_{b} [label={_q(label)}];")
        for (a, b), (c, d) in dom.covers():
            lines.append(f"  i{a}_{b} -> i{c}_{d};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def vineyard_dot(T: Transform, vy: VineyardGraph) -> str:
    lines = [f"graph {_q('vineyard_d' + str(vy.dim))} {{"]
    ids = {}
    for k, comp in enumerate(vy.components):
        lines.append(f"  subgraph cluster_{k} {{")
        lines.append(f"    label={_q('component ' + str(k + 1) + ' charges ' + str(comp.charges))};")
        for node in comp.nodes:
            i, I = node
            ids[node] = f"c{i}_{I[0]}_{I[1]}"
            n = len(T.cells[i].partition) + 1
            label = f"{T.cells[i].sign} {_interval_label(I, n)} q={vy.graph.nodes[node]['charge']}"
            lines.append(f"    {ids[node]} [label={_q(label)}];")
        lines.append("  }")
    for u, v in sorted(vy.graph.edges):
        lines.append(f"  {ids[u]} -- {ids[v]};")
    lines.append("}")
    return "\n".join(lines) + "\n"

"""Exact feasibility of A y >= b by Fourier-Motzkin elimination."""

from __future__ import annotations

import math
from fractions import Fraction
from typing import Sequence

Row = tuple[tuple[Fraction, ...], Fraction]


def _normalize(rows: list[Row]) -> list[Row] | None:
    """Scale rows positively, drop duplicates and dominated rows.

    Returns None as soon as a constant row 0 >= b with b > 0 shows up.
    """
    best: dict[tuple[Fraction, ...], Fraction] = {}
    for a, b in rows:
        lead = next((x for x in a if x != 0), None)
        if lead is None:
            if b > 0:
                return None
            continue
        s = abs(lead)
        a = tuple(x / s for x in a)
        b = b / s
        if a not in best or b > best[a]:
            best[a] = b
    return sorted(best.items())


def _pick(lo: Fraction | None, hi: Fraction | None) -> Fraction:
    # smallest-magnitude integer in [lo, hi] when there is one, else the midpoint
    if lo is None and hi is None:
        return Fraction(0)
    if lo is None:
        return Fraction(min(0, math.floor(hi)))
    if hi is None:
        return Fraction(max(0, math.ceil(lo)))
    if lo <= 0 <= hi:
        return Fraction(0)
    c = Fraction(math.ceil(lo)) if lo > 0 else Fraction(math.floor(hi))
    if lo <= c <= hi:
        return c
    return (lo + hi) / 2


def feasible_point(A: Sequence[Sequence[Fraction]], b: Sequence[Fraction]) -> list[Fraction] | None:
    """A point y with A y >= b, or None if the system is infeasible.

    Variables are eliminated last-to-first; each intermediate system is kept
    so a solution can be rebuilt by back-substitution.
    """
    if not A:
        return []
    n = len(A[0])
    rows = _normalize([(tuple(Fraction(x) for x in a), Fraction(bi)) for a, bi in zip(A, b)])
    if rows is None:
        return None
    stages: list[list[Row]] = []
    for j in range(n - 1, -1, -1):
        stages.append(rows)
        pos = [r for r in rows if r[0][j] > 0]
        neg = [r for r in rows if r[0][j] < 0]
        nxt = [r for r in rows if r[0][j] == 0]
        for ap, bp in pos:
            for an, bn in neg:
                cp, cn = 1 / ap[j], -1 / an[j]
                a = tuple(cp * x + cn * y for x, y in zip(ap, an))
                nxt.append((a, cp * bp + cn * bn))
        rows = _normalize(nxt)
        if rows is None:
            return None
    y = [Fraction(0)] * n
    for j, system in zip(range(n), reversed(stages)):
        lo = hi = None
        for a, bi in system:
            rest = sum((a[k] * y[k] for k in range(j)), Fraction(0))
            if a[j] == 0:
                continue
            bound = (bi - rest) / a[j]
            if a[j] > 0:
                lo = bound if lo is None else max(lo, bound)
            else:
                hi = bound if hi is None else min(hi, bound)
        y[j] = _pick(lo, hi)
    return y

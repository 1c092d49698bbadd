"""Exhaustive reference solver for small instances."""
from __future__ import annotations

import itertools
import math

import numpy as np

from .geometry import (
    DiameterSet,
    GeometryError,
    Solution,
    Solver,
    VertexSelection,
    polygon_area,
    polygon_areas,
)

DEFAULT_BUDGET = 5_000_000
_CHUNK = 200_000


class BudgetExceeded(RuntimeError):
    """The enumeration would exceed the allowed number of combinations."""


def _chunks(size: int, k: int):
    it = itertools.combinations(range(size), k)
    while True:
        flat = np.fromiter(itertools.chain.from_iterable(itertools.islice(it, _CHUNK)),
                           dtype=np.int64)
        if flat.size == 0:
            return
        yield flat.reshape(-1, k)


def oracle_solve(ds: DiameterSet, k: int, require_asymmetric: bool = True,
                 budget: int = DEFAULT_BUDGET) -> Solution:
    """Best ``k``-subset of the ``2n`` endpoints by full enumeration.

    Ties go to the lexicographically smallest index tuple.
    """
    if k < 3:
        raise GeometryError(f"k={k}: a polygon needs at least 3 vertices")
    if k > ds.size:
        raise GeometryError(f"k={k} exceeds the {ds.size} available endpoints")
    total = math.comb(ds.size, k)
    if total > budget:
        raise BudgetExceeded(f"C({ds.size}, {k}) = {total} combinations exceeds budget {budget}")

    best_area, best_row = -math.inf, None
    for rows in _chunks(ds.size, k):
        if require_asymmetric:
            diam = np.sort(rows % ds.n, axis=1)
            rows = rows[np.all(np.diff(diam, axis=1) != 0, axis=1)]
            if rows.shape[0] == 0:
                continue
        areas = polygon_areas(ds, rows)
        at = int(np.argmax(areas))
        if areas[at] > best_area:
            best_area, best_row = float(areas[at]), rows[at]
    if best_row is None:
        raise GeometryError(f"no asymmetric {k}-gon exists for n={ds.n}")
    sel = VertexSelection(tuple(int(x) for x in best_row))
    return Solution(sel, polygon_area(ds, sel), Solver.ORACLE)

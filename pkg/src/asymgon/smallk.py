"""Linear-time solvers for the largest triangle and asymmetric quadrilateral.

Both sweeps walk every endpoint once while a few pointers chase it around
the circle.  Pointers are *unwrapped* indices: ``x`` and ``x + 2n`` name the
same endpoint, one turn apart, so a pointer only ever grows.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Callable

from .geometry import (
    TWO_PI,
    DiameterSet,
    GeometryError,
    Solution,
    Solver,
    VertexSelection,
    polygon_area,
)

THIRD = TWO_PI / 3.0
TWO_THIRDS = 2.0 * TWO_PI / 3.0


class SweepError(RuntimeError):
    """A monotone pointer ran past its bound."""


@dataclass(frozen=True)
class CriticalPointers:
    """Boundary pointers of a critical vertex ``i``.

    ``j``: last endpoint within ``2pi/3`` of ``i``; ``k``: first at or beyond
    ``2pi/3``; ``l``: last within ``4pi/3``; ``m``: first at or beyond ``4pi/3``.
    """

    i: int
    j: int
    k: int
    l: int
    m: int


def advance_pointer(ds: DiameterSet, current: int, predicate: Callable[[int], bool],
                    limit: int | None = None) -> int:
    """First unwrapped index ``>= current`` where ``predicate`` holds."""
    if limit is None:
        limit = current + 2 * ds.size
    x = current
    while not predicate(x):
        x += 1
        if x > limit:
            raise SweepError(f"predicate unsatisfied between {current} and {limit}")
    return x


def _unwrapped(ds: DiameterSet) -> list[float]:
    # three turns cover every pointer of a sweep started in the first turn
    th = ds.theta.tolist()
    return th + [a + TWO_PI for a in th] + [a + 2 * TWO_PI for a in th]


def critical_pointers(ds: DiameterSet, i: int) -> CriticalPointers:
    """Pointers of endpoint ``i`` computed from scratch, without a sweep."""
    u = _unwrapped(ds)
    ui = u[i]
    return CriticalPointers(
        i,
        advance_pointer(ds, i, lambda x: u[x + 1] - ui > THIRD),
        advance_pointer(ds, i, lambda x: u[x] - ui >= THIRD),
        advance_pointer(ds, i, lambda x: u[x + 1] - ui > TWO_THIRDS),
        advance_pointer(ds, i, lambda x: u[x] - ui >= TWO_THIRDS),
    )


def solve_triangle(ds: DiameterSet, trace: list | None = None) -> Solution:
    """Largest triangle on the ``2n`` endpoints, in linear time.

    For each endpoint taken as a critical vertex only two triangles can be
    maximal: the one reaching as far as possible inside both ``2pi/3`` arcs
    around it, and the one staying as close as possible outside them.
    The four pointers follow :func:`critical_pointers`, advanced in place.
    """
    if ds.n < 3:
        raise GeometryError(f"need at least 3 diameters, got {ds.n}")
    size = ds.size
    u = _unwrapped(ds)
    sin = math.sin
    j = k = l = m = 0
    best, best_idx = -math.inf, None
    for i in range(size):
        ui = u[i]
        if j < i:
            j = i
        while not u[j + 1] - ui > THIRD:
            j += 1
        if k < i:
            k = i
        while not u[k] - ui >= THIRD:
            k += 1
        if l < i:
            l = i
        while not u[l + 1] - ui > TWO_THIRDS:
            l += 1
        if m < i:
            m = i
        while not u[m] - ui >= TWO_THIRDS:
            m += 1
        if trace is not None:
            trace.append(CriticalPointers(i, j, k, l, m))
        end = ui + TWO_PI
        last = i + size
        # candidates skipped when a pointer vertex coincides with another
        if i < j < m < last:
            uj, um = u[j], u[m]
            area = 0.5 * (sin(uj - ui) + sin(um - uj) + sin(end - um))
            if area > best:
                best, best_idx = area, (i, j % size, m % size)
        if i < k < l < last:
            uk, ul = u[k], u[l]
            area = 0.5 * (sin(uk - ui) + sin(ul - uk) + sin(end - ul))
            if area > best:
                best, best_idx = area, (i, k % size, l % size)
    sel = VertexSelection(best_idx)
    return Solution(sel, polygon_area(ds, sel), Solver.TRIANGLE)


def _runner_up(u: list[float], p: int, lo: int, hi: int, mid: float) -> int | None:
    """Second farthest point: a neighbour of the farthest, the distance being unimodal."""
    best = None
    for q in (p - 1, p + 1):
        if lo <= q <= hi and (best is None or abs(u[q] - mid) < abs(u[best] - mid)):
            best = q
    return best


def solve_quadrilateral(ds: DiameterSet, trace: list | None = None) -> Solution:
    """Largest asymmetric quadrilateral, in linear time.

    Some diagonal of the optimum joins an endpoint ``x`` to the antipode of
    its successor ``x + 1``.  For each such diagonal the other two vertices
    are the points farthest from it on either side, except that they may not
    be antipodal to each other; then the runner-up on one side is used.
    The farthest point on each side only moves forward as ``x`` advances.
    """
    n = ds.n
    if n < 4:
        raise GeometryError(f"need at least 4 diameters, got {n}")
    size = ds.size
    u = _unwrapped(ds)
    # the farther of two points from a chord is the one nearer the middle
    # of its arc: p + 1 beats p iff u[p] + u[p + 1] <= twice the arc middle
    pair = [a + b for a, b in zip(u, u[1:])]
    sin, cos = math.sin, math.cos
    pa = pb = 0
    best, best_idx = -math.inf, None
    for x in range(size):
        b = x + 1 + n
        ua, ub = u[x], u[b]
        twice_a, twice_b = ua + ub, ua + ub + TWO_PI
        # side a: x+2 .. x+n-1, side b: x+n+2 .. x+2n-1; the excluded
        # endpoints are the antipodes of the diagonal's ends
        hi_a, hi_b = x + n - 1, x + 2 * n - 1
        if pa < x + 2:
            pa = x + 2
        while pa < hi_a and pair[pa] <= twice_a:
            pa += 1
        if pb < x + n + 2:
            pb = x + n + 2
        while pb < hi_b and pair[pb] <= twice_b:
            pb += 1
        if trace is not None:
            trace.append((x, pa, pb))
        y, z = pa, pb
        mid_a, mid_b = 0.5 * twice_a, 0.5 * twice_b
        if z == y + n:
            # antipodal pair: swap in the runner-up on the side that loses less
            y2 = _runner_up(u, y, x + 2, hi_a, mid_a)
            z2 = _runner_up(u, z, x + n + 2, hi_b, mid_b)
            if z2 is None or (y2 is not None and
                              cos(u[y2] - mid_a) + cos(u[z] - mid_b)
                              > cos(u[y] - mid_a) + cos(u[z2] - mid_b)):
                y = y2
            else:
                z = z2
        # sin a + sin b = 2 sin((a+b)/2) cos((a-b)/2) on each side of the diagonal
        area = sin(0.5 * (ub - ua)) * (cos(u[y] - mid_a) + cos(u[z] - mid_b))
        if area > best:
            best, best_idx = area, (x % size, y % size, b % size, z % size)
    sel = VertexSelection(best_idx)
    return Solution(sel, polygon_area(ds, sel), Solver.QUAD)

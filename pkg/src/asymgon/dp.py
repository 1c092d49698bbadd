"""Dynamic program over double-wedges for arbitrary diameters.

Fix a vertex ``p_i`` of the polygon.  Every other vertex lies either in the
*front* half-circle ``[p_i, p_i')`` or in the *back* half-circle
``(p_i', p_i)``.  The front vertices form the wedge ``(i, j)``, the back
vertices the wedge ``(l, t)``; the polygon is the two wedges plus the closing
triangles ``O p_j p_l`` and ``O p_t p_i``.

For a fixed ``i`` each diameter has exactly one endpoint in the front half,
so diameters are ranked ``d = 0..n-1`` by the offset of that endpoint from
``p_i`` (rank 0 is the diameter of ``p_i`` itself).  Front endpoint of rank
``d`` is ``i + d``, back endpoint is ``i + n + d``.  Two chosen points are
antipodal exactly when they share a rank, so a double-wedge is asymmetric iff
its front ranks and back ranks are disjoint.

A state ``(j, l, t, s)`` (ranks ``dj``, ``dl``, ``dt``) is the best ``s``-point
double-wedge with front chain ``0..dj`` and back chain ``dl..dt``.  The chain
whose end has the larger rank was extended last:

* ``dj > dt``: ``f(j) = max_m f(m, l, t, s-1) + A(O p_m p_j)``  over ``m < dj``
* ``dt > dj``: ``f(t) = max_m f(j, l, m, s-1) + A(O p_m p_t)``  over ``dl <= m < dt``

Both maximisations have a concave gain ``sin(offset_b - offset_a) / 2``
inside a half circle, so the best predecessor never moves backward while the
growing anchor sweeps forward.  The monotone step exploits this.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass

import numpy as np

from .geometry import (
    DiameterSet,
    GeometryError,
    Solution,
    Solver,
    VertexSelection,
    polygon_area,
)

NEG_INF = -math.inf
TIE_TOL = 1e-12
NO_POINTER = -1


@dataclass(frozen=True)
class DoubleWedgeKey:
    i: int
    j: int
    l: int
    t: int
    s: int


def _front_rank(ds: DiameterSet, i: int, x: int) -> int | None:
    d = (x - i) % ds.size
    return d if d < ds.n else None


def _back_rank(ds: DiameterSet, i: int, x: int) -> int | None:
    d = (x - i - ds.n) % ds.size
    return d if 1 <= d < ds.n else None


def _locate(ds, i, j, l, t):
    dj, dl, dt = _front_rank(ds, i, j), _back_rank(ds, i, l), _back_rank(ds, i, t)
    if dj is None or dl is None or dt is None:
        return None
    return dj, dl, dt


class AnchorFrame:
    """Rank coordinates and gain table for one fixed anchor ``p_i``."""

    def __init__(self, ds: DiameterSet, i: int):
        if not 0 <= i < ds.size:
            raise GeometryError(f"anchor {i} out of range")
        self.ds = ds
        self.i = i
        self.n = n = ds.n
        self.offset = [ds.arc(i, i + d) for d in range(n)]
        gain = [[NEG_INF] * n for _ in range(n)]
        for a in range(n):
            for b in range(a + 1, n):
                gain[a][b] = 0.5 * math.sin(self.offset[b] - self.offset[a])
        self.gain = gain

    def front(self, d: int) -> int:
        return (self.i + d) % self.ds.size

    def back(self, d: int) -> int:
        return (self.i + self.n + d) % self.ds.size

    def front_rank(self, x: int) -> int | None:
        return _front_rank(self.ds, self.i, x)

    def back_rank(self, x: int) -> int | None:
        return _back_rank(self.ds, self.i, x)

    def locate(self, j: int, l: int, t: int) -> tuple[int, int, int] | None:
        return _locate(self.ds, self.i, j, l, t)

    def closing(self, dj: int, dl: int, dt: int) -> float:
        """Areas of ``O p_j p_l`` plus ``O p_t p_i``."""
        off = self.offset
        return -0.5 * math.sin(off[dl] - off[dj]) + 0.5 * math.sin(off[dt])


def _valid_ranks(dj: int, dl: int, dt: int) -> bool:
    if dl > dt or dj == dt:
        return False
    if dj == 0:
        return dl < dt
    return dj > dl


def is_valid_anchor(ds: DiameterSet, i: int, j: int, l: int, t: int) -> bool:
    """Whether ``(i, j, l, t)`` can anchor a double-wedge.

    Requires ``p_j`` in ``[p_i, p_i')``, ``p_l`` and ``p_t`` in ``(p_i', p_i)``
    with ``l`` not after ``t``, no antipodal anchors, and the ordering
    condition: either ``p_t'`` lies between ``p_i`` and ``p_j`` or ``p_j'``
    lies between ``p_l`` and ``p_t``.  The front wedge may also be the single
    point ``p_i`` while the back wedge grows.
    """
    size = ds.size
    if not all(0 <= x < size for x in (i, j, l, t)):
        return False
    ranks = _locate(ds, i, j, l, t)
    return ranks is not None and _valid_ranks(*ranks)


def satisfies_order_condition(ds: DiameterSet, i: int, j: int, l: int, t: int) -> bool:
    """Strict ordering condition of a double-wedge, as a pure arc test."""
    def strictly_between(x, a, b):
        return 0.0 < ds.arc(a, x) < ds.arc(a, b)

    return (strictly_between((t + ds.n) % ds.size, i, j)
            or strictly_between((j + ds.n) % ds.size, l, t))


def _base_local(frame: AnchorFrame, dj: int, dl: int, dt: int) -> float:
    if not _valid_ranks(dj, dl, dt):
        return NEG_INF
    if dj == 0:
        return frame.gain[dl][dt]
    if dl == dt:
        return frame.gain[0][dj]
    return NEG_INF


def dp_base(ds: DiameterSet, i: int, j: int, l: int, t: int) -> float:
    """Value of a 3-point double-wedge: the one non-degenerate wedge's triangle."""
    if not is_valid_anchor(ds, i, j, l, t):
        return NEG_INF
    frame = AnchorFrame(ds, i)
    return _base_local(frame, *frame.locate(j, l, t))


@dataclass
class DPLayer:
    """Values and backpointers for every key of one anchor at one size ``s``.

    Arrays are indexed by ranks ``[dj, dl, dt]``; backpointers hold the rank of
    the predecessor anchor, or ``-1``.
    """

    frame: AnchorFrame
    s: int
    value: np.ndarray
    back: np.ndarray

    def get(self, j: int, l: int, t: int) -> float:
        loc = self.frame.locate(j, l, t)
        return NEG_INF if loc is None else float(self.value[loc])


def base_layer(frame: AnchorFrame) -> DPLayer:
    n = frame.n
    value = np.full((n, n, n), NEG_INF)
    for dl in range(1, n):
        for dt in range(dl, n):
            for dj in range(n):
                value[dj, dl, dt] = _base_local(frame, dj, dl, dt)
    return DPLayer(frame, 3, value, np.full((n, n, n), NO_POINTER, dtype=np.int16))


def _argmax_scan(cands, start: int, stop: int, gain_col) -> tuple[float, int]:
    best, arg = NEG_INF, NO_POINTER
    for m in range(start, stop):
        v = cands[m]
        if v == NEG_INF:
            continue
        v += gain_col[m]
        if v > best + TIE_TOL or arg == NO_POINTER:
            best, arg = v, m
    return best, arg


def _step_naive_local(frame: AnchorFrame, prev: list, dj: int, dl: int, dt: int):
    if not _valid_ranks(dj, dl, dt):
        return NEG_INF, NO_POINTER
    gain = frame.gain
    if dj > dt:
        cands = [prev[m][dl][dt] for m in range(frame.n)]
        return _argmax_scan(cands, 0, dj, [gain[m][dj] for m in range(frame.n)])
    cands = prev[dj][dl]
    return _argmax_scan(cands, dl, dt, [gain[m][dt] for m in range(frame.n)])


def dp_step_naive(prev: DPLayer, j: int, l: int, t: int) -> tuple[float, int]:
    """Best value for key ``(prev.frame.i, j, l, t)`` at size ``prev.s + 1``.

    Scans every admissible predecessor.  Returns ``(value, m)`` where ``m`` is
    the predecessor endpoint index, or ``(-inf, -1)`` when none exists.
    """
    frame = prev.frame
    loc = frame.locate(j, l, t)
    if loc is None:
        return NEG_INF, NO_POINTER
    v, m = _step_naive_local(frame, prev.value.tolist(), *loc)
    if m == NO_POINTER:
        return v, m
    dj, dl, dt = loc
    return v, (frame.front(m) if dj > dt else frame.back(m))


def _front_row(frame: AnchorFrame, prev: list, dl: int, dt: int):
    """Monotone sweep of ``dj`` over ``dt+1..n-1`` for fixed ``(dl, dt)``."""
    n, gain = frame.n, frame.gain
    cands = [prev[m][dl][dt] for m in range(n)]
    out, r = [], 0
    for dj in range(dt + 1, n):
        col = [row[dj] for row in gain]
        v, m = _argmax_scan(cands, r, dj, col)
        if m != NO_POINTER:
            r = m
        out.append((dj, v, m))
    return out


def _back_row(frame: AnchorFrame, prev: list, dj: int, dl: int):
    """Monotone sweep of ``dt`` over ``max(dj, dl)+1..n-1`` for fixed ``(dj, dl)``."""
    n, gain = frame.n, frame.gain
    cands = prev[dj][dl]
    out, r = [], dl
    for dt in range(max(dj, dl) + 1, n):
        col = [row[dt] for row in gain]
        v, m = _argmax_scan(cands, r, dt, col)
        if m != NO_POINTER:
            r = m
        out.append((dt, v, m))
    return out


def dp_step_monotone(prev: DPLayer, fixed: tuple[int, int], sweep: str = "j"):
    """One monotone row of the next layer.

    ``sweep="j"``: ``fixed = (l, t)``, sweep the front anchor ``j`` over every
    endpoint past ``p_t'``.  ``sweep="t"``: ``fixed = (j, l)``, sweep the back
    anchor ``t`` over every endpoint past ``p_j'`` and ``p_l``.  Returns a list
    of ``(anchor, value, predecessor)`` endpoint triples in sweep order.
    """
    frame = prev.frame
    vals = prev.value.tolist()
    if sweep == "j":
        dl, dt = frame.back_rank(fixed[0]), frame.back_rank(fixed[1])
        if dl is None or dt is None or dl > dt:
            return []
        return [(frame.front(a), v, frame.front(m) if m >= 0 else NO_POINTER)
                for a, v, m in _front_row(frame, vals, dl, dt)]
    if sweep == "t":
        dj, dl = frame.front_rank(fixed[0]), frame.back_rank(fixed[1])
        if dj is None or dl is None or (dj != 0 and dj <= dl):
            return []
        return [(frame.back(a), v, frame.back(m) if m >= 0 else NO_POINTER)
                for a, v, m in _back_row(frame, vals, dj, dl)]
    raise ValueError(f"sweep must be 'j' or 't', not {sweep!r}")


def next_layer(prev: DPLayer, monotone: bool = True) -> DPLayer:
    frame, n = prev.frame, prev.frame.n
    vals = prev.value.tolist()
    value = np.full((n, n, n), NEG_INF)
    back = np.full((n, n, n), NO_POINTER, dtype=np.int16)
    if monotone:
        for dl in range(1, n):
            for dt in range(dl, n):
                for dj, v, m in _front_row(frame, vals, dl, dt):
                    if _valid_ranks(dj, dl, dt):
                        value[dj, dl, dt], back[dj, dl, dt] = v, m
        for dl in range(1, n):
            for dj in [0, *range(dl + 1, n)]:
                for dt, v, m in _back_row(frame, vals, dj, dl):
                    value[dj, dl, dt], back[dj, dl, dt] = v, m
    else:
        for dj in range(n):
            for dl in range(1, n):
                for dt in range(dl, n):
                    value[dj, dl, dt], back[dj, dl, dt] = _step_naive_local(
                        frame, vals, dj, dl, dt)
    return DPLayer(frame, prev.s + 1, value, back)


def build_layers(frame: AnchorFrame, k: int, monotone: bool = True) -> list[DPLayer]:
    layers = [base_layer(frame)]
    while layers[-1].s < k:
        layers.append(next_layer(layers[-1], monotone))
    return layers


def _trace(layers: list[DPLayer], dj: int, dl: int, dt: int) -> tuple[set, set]:
    front, back = {0}, set()
    for layer in reversed(layers):
        if layer.s == 3:
            front.add(dj)
            back.update((dl, dt))
            break
        m = int(layer.back[dj, dl, dt])
        if dj > dt:
            front.add(dj)
            dj = m
        else:
            back.add(dt)
            dt = m
    return front, back


@dataclass(frozen=True)
class AnchorResult:
    area: float
    key: DoubleWedgeKey | None
    indices: tuple[int, ...]


def solve_anchor(ds: DiameterSet, i: int, k: int, monotone: bool = True) -> AnchorResult:
    """Best asymmetric ``k``-gon having ``p_i`` as its first anchor."""
    frame = AnchorFrame(ds, i)
    layers = build_layers(frame, k, monotone)
    top = layers[-1].value
    best, where = NEG_INF, None
    for dj, dl, dt in zip(*np.nonzero(np.isfinite(top))):
        v = float(top[dj, dl, dt]) + frame.closing(dj, dl, dt)
        if v > best + TIE_TOL or where is None:
            best, where = v, (int(dj), int(dl), int(dt))
    if where is None:
        return AnchorResult(NEG_INF, None, ())
    front, back = _trace(layers, *where)
    idx = tuple(sorted([frame.front(d) for d in front] + [frame.back(d) for d in back]))
    dj, dl, dt = where
    key = DoubleWedgeKey(i, frame.front(dj), frame.back(dl), frame.back(dt), k)
    return AnchorResult(best, key, idx)


def _solve_anchor_args(args):
    return solve_anchor(*args)


def solve_dp_detailed(ds: DiameterSet, k: int, threads: int = 1,
                      monotone: bool = True) -> tuple[Solution, AnchorResult]:
    if ds.n < 3:
        raise GeometryError(f"need at least 3 diameters, got {ds.n}")
    if not 3 <= k < ds.n:
        raise GeometryError(f"k={k} outside [3, {ds.n - 1}]")
    jobs = [(ds, i, k, monotone) for i in range(ds.size)]
    if threads > 1:
        with ProcessPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(_solve_anchor_args, jobs))
    else:
        results = [_solve_anchor_args(job) for job in jobs]

    best = None
    for res in results:
        if res.key is not None and (best is None or res.area > best.area + TIE_TOL):
            best = res
    if best is None:
        raise GeometryError(f"no asymmetric {k}-gon for n={ds.n}")
    sel = VertexSelection(best.indices)
    area = polygon_area(ds, sel)
    if sel.k != k or abs(area - best.area) > 1e-9:
        raise AssertionError(f"inconsistent reconstruction: {sel} {area} vs {best.area}")
    return Solution(sel, area, Solver.DP), best


def solve_dp(ds: DiameterSet, k: int, threads: int = 1) -> Solution:
    """Maximum-area asymmetric ``k``-gon for arbitrary diameters.

    ``threads > 1`` spreads the independent anchors over worker processes;
    the result is identical to the sequential run.
    """
    return solve_dp_detailed(ds, k, threads)[0]

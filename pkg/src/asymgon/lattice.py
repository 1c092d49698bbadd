"""Closed-form optima for evenly spaced diameters.

On the ``m = 2n`` point lattice a ``k``-gon is described by its interval
vector: the cyclic list of lattice steps between consecutive vertices.
"""
from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

from .geometry import (
    DiameterSet,
    GeometryError,
    Solution,
    Solver,
    VertexSelection,
    intervals_asymmetric,
    polygon_area,
)


@dataclass(frozen=True)
class IntervalVector:
    gaps: tuple[int, ...]
    m: int

    def __post_init__(self):
        gaps = tuple(int(g) for g in self.gaps)
        object.__setattr__(self, "gaps", gaps)
        if any(g < 1 for g in gaps):
            raise GeometryError(f"gaps must be positive: {gaps}")
        if sum(gaps) != self.m:
            raise GeometryError(f"gaps {gaps} sum to {sum(gaps)}, expected {self.m}")

    @property
    def k(self) -> int:
        return len(self.gaps)

    def __getitem__(self, i: int) -> int:
        return self.gaps[i % len(self.gaps)]

    def __iter__(self):
        return iter(self.gaps)

    def __len__(self):
        return len(self.gaps)

    def area(self) -> float:
        """Half the sum of ``sin(pi * a / n)`` over the gaps, with ``m = 2n``."""
        return 0.5 * math.fsum(math.sin(2.0 * math.pi * g / self.m) for g in self.gaps)

    def is_asymmetric(self) -> bool:
        if self.m % 2:
            raise GeometryError("asymmetry is only defined on an even lattice")
        return intervals_asymmetric(self.gaps, self.m // 2)

    def to_indices(self, start: int = 0) -> list[int]:
        out, x = [], start
        for g in self.gaps:
            out.append(x % self.m)
            x += g
        return out

    def to_selection(self, start: int = 0) -> VertexSelection:
        return VertexSelection(tuple(self.to_indices(start)))


def _rep(value: int, count: int) -> list[int]:
    return [value] * count


def _check_k(k: int, lo: int, hi: int, what: str) -> None:
    if not lo <= k <= hi:
        raise GeometryError(f"{what}: k={k} outside [{lo}, {hi}]")


def max_subpolygon_lattice(m: int, k: int) -> IntervalVector:
    """Largest ``k``-gon on the regular ``m``-gon, asymmetric or not."""
    _check_k(k, 3, m, "max_subpolygon_lattice")
    q, r = divmod(m, k)
    return IntervalVector(tuple(_rep(q + 1, r) + _rep(q, k - r)), m)


def max_asymmetric_lattice_odd(n: int, k: int) -> IntervalVector:
    if k % 2 == 0:
        raise GeometryError(f"k={k} is even")
    _check_k(k, 3, n - 1, "max_asymmetric_lattice_odd")
    q, r = divmod(2 * n, k)
    if r % 2 == 0:
        gaps = (_rep(q + 1, r // 2) + _rep(q, (k - r - 1) // 2)
                + _rep(q + 1, r // 2) + _rep(q, (k - r + 1) // 2))
    else:
        gaps = (_rep(q, (k - r) // 2) + _rep(q + 1, (r - 1) // 2)
                + _rep(q, (k - r) // 2) + _rep(q + 1, (r + 1) // 2))
    return IntervalVector(tuple(gaps), 2 * n)


def max_asymmetric_lattice_even(n: int, k: int) -> IntervalVector:
    # 2n and kq are both even, so r is even and r <= k - 2
    if k % 2:
        raise GeometryError(f"k={k} is odd")
    _check_k(k, 4, n - 1, "max_asymmetric_lattice_even")
    q, r = divmod(2 * n, k)
    half = (k - r - 2) // 2
    gaps = ([q - 1] + _rep(q + 1, r // 2) + _rep(q, half)
            + _rep(q + 1, (r + 2) // 2) + _rep(q, half))
    return IntervalVector(tuple(gaps), 2 * n)


def max_asymmetric_lattice(n: int, k: int) -> IntervalVector:
    if k % 2:
        return max_asymmetric_lattice_odd(n, k)
    return max_asymmetric_lattice_even(n, k)


def solve_lattice(n: int, k: int) -> Solution:
    """Maximum-area asymmetric ``k``-gon for ``n`` evenly spaced diameters."""
    _check_k(k, 3, n - 1, "solve_lattice")
    iv = max_asymmetric_lattice(n, k)
    sel = iv.to_selection(0)
    return Solution(sel, polygon_area(DiameterSet.evenly_spaced(n), sel), Solver.LATTICE)


def interval_vector(sel: VertexSelection | Sequence[int], m: int) -> IntervalVector:
    """Interval vector of a selection on the ``m`` lattice, starting at its first index."""
    idx = sorted(sel)
    gaps = [b - a for a, b in zip(idx, idx[1:])] + [idx[0] + m - idx[-1]]
    return IntervalVector(tuple(gaps), m)


def swap_improves(a: int, b: int, n: int) -> bool:
    """Whether moving one step from gap ``a`` to gap ``b`` strictly increases the area.

    Holds whenever ``a - b >= 2`` and ``a + b < 2n``.
    """
    s = lambda g: math.sin(math.pi * g / n)
    return s(a) + s(b) < s(a - 1) + s(b + 1)


def count_area(n: int, q: int, counts: Sequence[int]) -> float:
    """Twice the area of a polygon with ``counts[c]`` gaps of length ``q - 1 + c``."""
    return math.fsum(c * math.sin(math.pi * (q - 1 + off) / n) for off, c in enumerate(counts))


def even_case_areas(n: int, k: int) -> tuple[float, float, float]:
    """Doubled areas of the three asymmetric candidates for even ``k``.

    With ``2n = kq + r`` the gaps lie in ``{q-1, q, q+1, q+2}`` with at most
    one ``q-1`` and one ``q+2``.  Returned in order: one of each, only a ``q+2``,
    only a ``q-1``.  Requires ``r >= 2`` so that every count is non-negative.
    """
    if k % 2:
        raise GeometryError(f"k={k} is odd")
    q, r = divmod(2 * n, k)
    if r < 2 or k - r - 2 < 0:
        raise GeometryError(f"n={n}, k={k}: r={r} leaves a negative count")
    both = count_area(n, q, (1, k - r - 1, r - 1, 1))
    high = count_area(n, q, (0, k - r + 1, r - 2, 1))
    low = count_area(n, q, (1, k - r - 2, r + 1, 0))
    return both, high, low

"""Diameter endpoints on the unit circle and exact area formulas.

Endpoints are indexed so that the angle grows with the index: for ``n``
diameters with primary angles ``a_0 < ... < a_{n-1}`` in ``[0, pi)``, endpoint
``x < n`` sits at ``a_x`` and endpoint ``x >= n`` at ``a_{x-n} + pi``.  The
antipode of ``x`` is then always ``(x + n) % 2n``.

All traversals run counterclockwise (increasing angle).  Walking clockwise
instead mirrors every configuration, which leaves areas unchanged.
"""
from __future__ import annotations

import enum
import math
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

TWO_PI = 2.0 * math.pi

#: minimum separation between two diameters, in radians
EPS_ANGLE = 1e-9


class GeometryError(ValueError):
    """Raised for malformed diameter sets or vertex selections."""


class Solver(str, enum.Enum):
    LATTICE = "lattice"
    DP = "dp"
    TRIANGLE = "triangle"
    QUAD = "quad"
    ORACLE = "oracle"


@dataclass(frozen=True)
class DiameterSet:
    """``n`` diameters given by strictly increasing angles in ``[0, pi)``."""

    angles: tuple[float, ...]
    _theta: np.ndarray = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        angles = tuple(float(a) for a in self.angles)
        object.__setattr__(self, "angles", angles)
        n = len(angles)
        if n < 2:
            raise GeometryError(f"need at least 2 diameters, got {n}")
        for a in angles:
            if not (0.0 <= a < math.pi) or math.isnan(a):
                raise GeometryError(f"angle {a!r} outside [0, pi)")
        for a, b in zip(angles, angles[1:]):
            if b - a <= EPS_ANGLE:
                raise GeometryError("angles must be strictly increasing and "
                                    f"separated by more than {EPS_ANGLE}")
        if angles[0] + math.pi - angles[-1] <= EPS_ANGLE:
            raise GeometryError("first and last diameters nearly coincide")
        theta = np.concatenate([np.array(angles), np.array(angles) + math.pi])
        theta.flags.writeable = False
        object.__setattr__(self, "_theta", theta)

    @classmethod
    def from_angles(cls, angles: Iterable[float]) -> "DiameterSet":
        """Build from arbitrary radians, reducing each modulo pi and sorting."""
        reduced = []
        for a in angles:
            r = math.fmod(float(a), math.pi) % math.pi
            # a tiny negative input rounds up to exactly pi
            reduced.append(0.0 if r >= math.pi else r)
        return cls(tuple(sorted(reduced)))

    @classmethod
    def evenly_spaced(cls, n: int) -> "DiameterSet":
        if n < 2:
            raise GeometryError(f"need at least 2 diameters, got {n}")
        return cls(tuple(i * math.pi / n for i in range(n)))

    @property
    def n(self) -> int:
        return len(self.angles)

    @property
    def size(self) -> int:
        """Number of endpoints, ``2n``."""
        return 2 * len(self.angles)

    @property
    def theta(self) -> np.ndarray:
        """Angles of all ``2n`` endpoints (read-only array)."""
        return self._theta

    def angle(self, x: int) -> float:
        return float(self._theta[x])

    def point(self, x: int) -> tuple[float, float]:
        t = self._theta[x]
        return (math.cos(t), math.sin(t))

    def unwrapped_angle(self, x: int) -> float:
        """Angle of endpoint ``x % 2n`` plus one full turn per wrap of ``x``."""
        q, r = divmod(x, self.size)
        return float(self._theta[r]) + TWO_PI * q

    def arc(self, a: int, b: int) -> float:
        """Counterclockwise arc from endpoint ``a`` to endpoint ``b``, in ``[0, 2pi)``."""
        d = float(self._theta[b % self.size] - self._theta[a % self.size])
        return d + TWO_PI if d < 0 else d

    def is_even(self, tol: float = 1e-9) -> bool:
        """True when consecutive endpoints are all ``pi/n`` apart."""
        step = math.pi / self.n
        gaps = np.diff(np.append(self._theta, self._theta[0] + TWO_PI))
        return bool(np.all(np.abs(gaps - step) <= tol))


@dataclass(frozen=True)
class VertexSelection:
    """A candidate polygon: endpoint indices kept in counterclockwise order."""

    indices: tuple[int, ...]

    def __post_init__(self):
        idx = tuple(sorted(int(x) for x in self.indices))
        if len(idx) < 3:
            raise GeometryError(f"a polygon needs at least 3 vertices, got {len(idx)}")
        if len(set(idx)) != len(idx):
            raise GeometryError(f"duplicate vertex indices in {self.indices}")
        object.__setattr__(self, "indices", idx)

    @property
    def k(self) -> int:
        return len(self.indices)

    def __iter__(self):
        return iter(self.indices)

    def __len__(self):
        return len(self.indices)

    def check(self, ds: DiameterSet) -> None:
        if self.indices[0] < 0 or self.indices[-1] >= ds.size:
            raise GeometryError(f"indices {self.indices} out of range for 2n={ds.size}")


@dataclass(frozen=True)
class Solution:
    selection: VertexSelection
    area: float
    solver: Solver


def _as_selection(sel) -> VertexSelection:
    return sel if isinstance(sel, VertexSelection) else VertexSelection(tuple(sel))


def antipode(x: int, n: int) -> int:
    if n < 1:
        raise GeometryError(f"diameter count must be positive, got {n}")
    if not 0 <= x < 2 * n:
        raise GeometryError(f"endpoint index {x} out of range [0, {2 * n})")
    return (x + n) % (2 * n)


def polygon_area(ds: DiameterSet, sel: VertexSelection | Sequence[int]) -> float:
    """Area of the inscribed polygon, as half the sum of sines of the arc gaps."""
    sel = _as_selection(sel)
    sel.check(ds)
    th = ds.theta[list(sel.indices)]
    gaps = np.diff(np.append(th, th[0] + TWO_PI))
    return 0.5 * math.fsum(np.sin(gaps))


def polygon_areas(ds: DiameterSet, rows: np.ndarray) -> np.ndarray:
    """Vectorised :func:`polygon_area` for an ``(N, k)`` array of sorted index rows."""
    rows = np.asarray(rows)
    th = ds.theta[rows]
    gaps = np.diff(th, axis=1)
    closing = th[:, 0] + TWO_PI - th[:, -1]
    return 0.5 * (np.sin(gaps).sum(axis=1) + np.sin(closing))


def shoelace_area(points: Sequence[tuple[float, float]]) -> float:
    """Signed-then-absolute shoelace area of a simple polygon."""
    s = 0.0
    for (x0, y0), (x1, y1) in zip(points, list(points[1:]) + [points[0]]):
        s += x0 * y1 - x1 * y0
    return abs(s) / 2.0


def triangle_area_with_center(ds: DiameterSet, a: int, b: int) -> float:
    """Area of the triangle formed by the centre and endpoints ``a``, ``b``.

    ``b`` must follow ``a`` counterclockwise by an arc strictly below pi.
    """
    if a == b:
        raise GeometryError("degenerate triangle: a == b")
    gap = ds.arc(a, b)
    if gap >= math.pi:
        raise GeometryError(f"arc from {a} to {b} is {gap:.6g} >= pi")
    return 0.5 * math.sin(gap)


def is_asymmetric(sel: VertexSelection | Sequence[int], n: int) -> bool:
    """True iff no two selected endpoints are antipodal."""
    diam = [x % n for x in sel]
    return len(set(diam)) == len(diam)


def intervals_asymmetric(gaps: Sequence[int], n: int) -> bool:
    """Window-sum test on an interval vector of the ``2n`` lattice.

    A selection contains a diameter exactly when some run of consecutive
    cyclic gaps (shorter than the whole cycle) adds up to ``n``.
    """
    k = len(gaps)
    doubled = list(gaps) * 2
    for start in range(k):
        acc = 0
        for length in range(1, k):
            acc += doubled[start + length - 1]
            if acc == n:
                return False
            if acc > n:
                break
    return True

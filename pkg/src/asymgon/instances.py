"""Instance files and seeded instance generation.

An instance file is JSON, either ``{"diameters": [radians, ...]}`` or
``{"even": n}``.
"""
from __future__ import annotations

import json
import logging
import math
from pathlib import Path

import numpy as np

from .geometry import EPS_ANGLE, DiameterSet, GeometryError

log = logging.getLogger(__name__)


class InstanceError(ValueError):
    """Malformed instance file."""


def parse_instance(data) -> DiameterSet:
    if not isinstance(data, dict):
        raise InstanceError("instance must be a JSON object")
    if "even" in data:
        n = data["even"]
        if isinstance(n, bool) or not isinstance(n, int):
            raise InstanceError(f"'even' must be an integer, got {n!r}")
        try:
            return DiameterSet.evenly_spaced(n)
        except GeometryError as exc:
            raise InstanceError(str(exc)) from exc
    if "diameters" not in data:
        raise InstanceError("instance needs a 'diameters' list or an 'even' count")
    raw = data["diameters"]
    if not isinstance(raw, list) or not all(
            isinstance(a, (int, float)) and not isinstance(a, bool) for a in raw):
        raise InstanceError("'diameters' must be a list of numbers")
    if not all(math.isfinite(a) for a in raw):
        raise InstanceError("'diameters' must be finite")
    outside = [a for a in raw if not 0.0 <= a < math.pi]
    if outside:
        log.warning("normalizing %d angle(s) outside [0, pi) modulo pi", len(outside))
    try:
        return DiameterSet.from_angles(raw)
    except GeometryError as exc:
        raise InstanceError(str(exc)) from exc


def load_instance(path) -> DiameterSet:
    try:
        data = json.loads(Path(path).read_text())
    except (OSError, json.JSONDecodeError) as exc:
        raise InstanceError(f"cannot read instance {path}: {exc}") from exc
    return parse_instance(data)


def _far_enough(angles: np.ndarray) -> bool:
    s = np.sort(angles)
    gaps = np.diff(np.append(s, s[0] + math.pi))
    return bool(np.all(gaps > EPS_ANGLE))


def generate_instance(n: int, seed: int | None = None, even: bool = False) -> dict:
    """Instance dict; random angles are uniform in ``[0, pi)``, redrawn until distinct."""
    if n < 3:
        raise GeometryError(f"need n >= 3, got {n}")
    if even:
        return {"even": n}
    rng = np.random.default_rng(seed)
    while True:
        angles = np.sort(rng.uniform(0.0, math.pi, n))
        if _far_enough(angles):
            return {"diameters": [float(a) for a in angles]}


def dump_instance(inst: dict) -> str:
    # repr of a float round-trips, so the same seed gives the same bytes
    return json.dumps(inst, indent=1) + "\n"

"""Onset bit strings <-> interval vectors on an even lattice.

A rhythm of ``m`` pulses is a string of ``'0'``/``'1'``; the onsets are the
polygon's vertices on the regular ``m``-gon.
"""
from __future__ import annotations

from typing import Sequence

from .geometry import GeometryError, VertexSelection
from .lattice import IntervalVector


def encode_rhythm(sel: VertexSelection | Sequence[int] | IntervalVector, m: int | None = None) -> str:
    """Bit string with an onset at every selected index.

    Position 0 of the string is the first selected vertex, so the encoding
    is rotated to start on an onset.  An :class:`IntervalVector` may be passed
    directly, in which case ``m`` defaults to its lattice size.
    """
    if isinstance(sel, IntervalVector):
        m = sel.m if m is None else m
        sel = sel.to_indices(0)
    if m is None:
        raise GeometryError("lattice size m is required")
    idx = sorted(sel)
    if not idx:
        raise GeometryError("empty selection")
    if idx[0] < 0 or idx[-1] >= m:
        raise GeometryError(f"indices {idx} out of range for m={m}")
    bits = ["0"] * m
    for x in idx:
        bits[(x - idx[0]) % m] = "1"
    return "".join(bits)


def decode_rhythm(bits: str) -> IntervalVector:
    """Gaps between consecutive onsets, starting at the first ``'1'``."""
    if not bits:
        raise GeometryError("empty rhythm string")
    bad = set(bits) - {"0", "1"}
    if bad:
        raise GeometryError(f"rhythm strings use only '0' and '1', found {sorted(bad)}")
    onsets = [pos for pos, c in enumerate(bits) if c == "1"]
    if len(onsets) < 3:
        raise GeometryError(f"need at least 3 onsets, got {len(onsets)}")
    m = len(bits)
    gaps = [b - a for a, b in zip(onsets, onsets[1:])] + [onsets[0] + m - onsets[-1]]
    return IntervalVector(tuple(gaps), m)

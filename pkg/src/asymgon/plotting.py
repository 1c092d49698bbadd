"""SVG figures of a diameter set and a selected polygon."""
from __future__ import annotations

import math
from typing import Sequence

import matplotlib

matplotlib.use("Agg")

import matplotlib.pyplot as plt  # noqa: E402
from matplotlib.patches import Circle, Polygon  # noqa: E402

from .geometry import DiameterSet, GeometryError, VertexSelection  # noqa: E402

# fixed salt and no date keep the SVG byte-identical across runs
_RC = {
    "svg.hashsalt": "asymgon",
    "svg.fonttype": "none",
    "font.family": "sans-serif",
    "font.size": 9,
    "axes.linewidth": 0.8,
}


def render_svg(ds: DiameterSet, indices: Sequence[int], path, title: str | None = None,
               size: float = 4.0) -> None:
    """Write the unit circle, all endpoints and diameters, and the filled polygon."""
    idx = sorted(int(x) for x in indices)
    if not idx:
        raise GeometryError("cannot render an empty selection")
    VertexSelection(tuple(idx)).check(ds)

    with plt.rc_context(_RC):
        fig, ax = plt.subplots(figsize=(size, size))
        ax.set_aspect("equal")
        ax.set_axis_off()
        lim = 1.15
        ax.set_xlim(-lim, lim)
        ax.set_ylim(-lim, lim)

        ax.add_patch(Circle((0, 0), 1.0, fill=False, lw=0.8, ec="0.55", gid="unit-circle"))
        for d in range(ds.n):
            (x0, y0), (x1, y1) = ds.point(d), ds.point(d + ds.n)
            ax.plot([x0, x1], [y0, y1], lw=0.5, color="0.75", zorder=1, gid=f"diameter-{d}")

        pts = [ds.point(x) for x in idx]
        ax.add_patch(Polygon(pts, closed=True, fc="#4c72b0", ec="#1f3d7a", alpha=0.45,
                             lw=1.2, zorder=2, gid="solution-polygon"))

        xs, ys = zip(*(ds.point(x) for x in range(ds.size)))
        ax.scatter(xs, ys, s=14, color="black", zorder=3, gid="endpoints")
        vx, vy = zip(*pts)
        ax.scatter(vx, vy, s=30, color="#c44e52", zorder=4, gid="vertices")

        if title:
            ax.set_title(title)
        fig.savefig(path, format="svg", metadata={"Date": None}, bbox_inches="tight")
        plt.close(fig)


def result_title(result: dict) -> str:
    area = result.get("area")
    text = f"n={result.get('n')}, k={result.get('k')}"
    if isinstance(area, (int, float)) and math.isfinite(area):
        text += f", area={area:.6f}"
    return text

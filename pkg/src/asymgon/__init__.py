"""Maximum-area asymmetric polygons on antipodal point sets."""
from .dp import solve_dp
from .geometry import (
    DiameterSet,
    GeometryError,
    Solution,
    Solver,
    VertexSelection,
    antipode,
    is_asymmetric,
    polygon_area,
)
from .lattice import IntervalVector, max_asymmetric_lattice, max_subpolygon_lattice, solve_lattice
from .oracle import BudgetExceeded, oracle_solve
from .rhythm import decode_rhythm, encode_rhythm
from .smallk import solve_quadrilateral, solve_triangle

__version__ = "0.1.0"

__all__ = [
    "BudgetExceeded",
    "DiameterSet",
    "GeometryError",
    "IntervalVector",
    "Solution",
    "Solver",
    "VertexSelection",
    "antipode",
    "decode_rhythm",
    "encode_rhythm",
    "is_asymmetric",
    "max_asymmetric_lattice",
    "max_subpolygon_lattice",
    "oracle_solve",
    "polygon_area",
    "solve_dp",
    "solve_lattice",
    "solve_quadrilateral",
    "solve_triangle",
]

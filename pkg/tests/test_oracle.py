import math

import numpy as np
import pytest

from asymgon.geometry import DiameterSet, GeometryError, is_asymmetric, polygon_area
from asymgon.lattice import max_subpolygon_lattice
from asymgon.oracle import BudgetExceeded, oracle_solve

from conftest import random_diameters


def test_equilateral():
    sol = oracle_solve(DiameterSet.evenly_spaced(3), 3, require_asymmetric=False)
    assert sol.area == pytest.approx(3 * math.sqrt(3) / 4, abs=1e-12)
    assert sol.solver.value == "oracle"


def test_even_8_5_golden():
    sol = oracle_solve(DiameterSet.evenly_spaced(8), 5)
    assert sol.area == pytest.approx(2.3477590650, abs=1e-9)
    assert is_asymmetric(sol.selection, 8)


def test_k_too_small():
    with pytest.raises(GeometryError):
        oracle_solve(DiameterSet.evenly_spaced(5), 2)


def test_budget_refusal():
    with pytest.raises(BudgetExceeded):
        oracle_solve(DiameterSet.evenly_spaced(12), 8, budget=1000)


def test_no_asymmetric_polygon():
    with pytest.raises(GeometryError):
        oracle_solve(DiameterSet.evenly_spaced(4), 5)


def test_lexicographic_tie_break():
    # every rotation of the optimum ties; the smallest tuple wins
    sol = oracle_solve(DiameterSet.evenly_spaced(6), 3, require_asymmetric=False)
    assert sol.selection.indices == (0, 4, 8)


def test_unconstrained_matches_closed_form():
    for n in range(3, 11):
        ds = DiameterSet.evenly_spaced(n)
        for k in range(3, 2 * n + 1):
            sol = oracle_solve(ds, k, require_asymmetric=False)
            assert sol.area == pytest.approx(max_subpolygon_lattice(2 * n, k).area(), abs=1e-9)


def test_area_independent_of_enumeration_order(rng):
    from itertools import combinations

    for _ in range(10):
        ds = random_diameters(rng, 6)
        subsets = [c for c in combinations(range(12), 4) if is_asymmetric(c, 6)]
        order = rng.permutation(len(subsets))
        shuffled = max(polygon_area(ds, subsets[i]) for i in order)
        assert oracle_solve(ds, 4).area == pytest.approx(shuffled, abs=1e-12)

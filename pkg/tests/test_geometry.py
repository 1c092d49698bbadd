import itertools
import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from asymgon.geometry import (
    DiameterSet,
    GeometryError,
    VertexSelection,
    antipode,
    intervals_asymmetric,
    is_asymmetric,
    polygon_area,
    shoelace_area,
    triangle_area_with_center,
)
from asymgon.lattice import IntervalVector, swap_improves

from conftest import random_diameters


@pytest.mark.parametrize("x, n, expected", [(0, 4, 4), (7, 4, 3), (3, 8, 11)])
def test_antipode_examples(x, n, expected):
    assert antipode(x, n) == expected


@pytest.mark.parametrize("x, n", [(-1, 4), (8, 4), (0, 0)])
def test_antipode_out_of_range(x, n):
    with pytest.raises(GeometryError):
        antipode(x, n)


@given(st.integers(1, 200), st.data())
def test_antipode_is_fixed_point_free_involution(n, data):
    x = data.draw(st.integers(0, 2 * n - 1))
    y = antipode(x, n)
    assert y != x
    assert antipode(y, n) == x


def test_endpoint_indexing():
    ds = DiameterSet((0.1, 1.0, 2.5))
    assert ds.size == 6
    assert np.all(np.diff(ds.theta) > 0)
    for x in range(3):
        assert ds.angle(x + 3) == pytest.approx(ds.angle(x) + math.pi)


@pytest.mark.parametrize("angles", [
    (0.5,),
    (0.2, 0.1),
    (0.0, 0.0 + 1e-12),
    (0.0, math.pi),
    (-0.1, 1.0),
    (0.0, math.pi - 1e-12),
])
def test_invalid_diameter_sets(angles):
    with pytest.raises(GeometryError):
        DiameterSet(angles)


def test_from_angles_normalizes():
    ds = DiameterSet.from_angles([4.0, -0.5, 1.0])
    assert ds.angles == pytest.approx(sorted([4.0 - math.pi, math.pi - 0.5, 1.0]))


def test_equilateral_triangle_area():
    ds = DiameterSet.evenly_spaced(3)
    assert polygon_area(ds, [0, 2, 4]) == pytest.approx(3 * math.sqrt(3) / 4, abs=1e-12)


def test_clave_area_direct_formula():
    ds = DiameterSet.evenly_spaced(8)
    sel = IntervalVector((3, 3, 4, 2, 4), 16).to_selection(0)
    expected = 0.5 * (2 * math.sin(3 * math.pi / 8) + 2 * math.sin(math.pi / 2) + math.sin(math.pi / 4))
    assert polygon_area(ds, sel) == pytest.approx(expected, abs=1e-12)
    assert polygon_area(ds, sel) == pytest.approx(2.2774329, abs=1e-7)


def test_rotation_by_one_step_keeps_area(rng):
    ds = DiameterSet.evenly_spaced(7)
    for _ in range(50):
        sel = sorted(rng.choice(14, size=5, replace=False).tolist())
        assert polygon_area(ds, sel) == pytest.approx(
            polygon_area(ds, [(x + 1) % 14 for x in sel]), abs=1e-12)


def test_selection_errors():
    with pytest.raises(GeometryError):
        VertexSelection((0, 1))
    with pytest.raises(GeometryError):
        VertexSelection((0, 1, 1))
    with pytest.raises(GeometryError):
        VertexSelection((0, 2, 9)).check(DiameterSet.evenly_spaced(4))


def test_polygon_area_matches_shoelace(rng):
    worst = 0.0
    for _ in range(10_000):
        n = int(rng.integers(3, 15))
        ds = random_diameters(rng, n)
        k = int(rng.integers(3, 2 * n + 1))
        sel = sorted(rng.choice(2 * n, size=k, replace=False).tolist())
        worst = max(worst, abs(polygon_area(ds, sel) - shoelace_area([ds.point(x) for x in sel])))
    assert worst < 1e-12


@pytest.mark.parametrize("gap, expected", [(math.pi / 2, 0.5), (math.pi / 3, 0.4330127)])
def test_triangle_with_center(gap, expected):
    ds = DiameterSet((0.0, gap))
    assert triangle_area_with_center(ds, 0, 1) == pytest.approx(expected, abs=1e-7)


def test_triangle_with_center_errors():
    ds = DiameterSet.evenly_spaced(4)
    with pytest.raises(GeometryError):
        triangle_area_with_center(ds, 2, 2)
    with pytest.raises(GeometryError):
        triangle_area_with_center(ds, 0, 4)


@pytest.mark.parametrize("gaps, expected", [
    ((3, 3, 4, 2, 4), True),
    ((4, 4, 4, 4), False),
    ((3, 3, 3, 3, 4), True),
])
def test_is_asymmetric_examples(gaps, expected):
    iv = IntervalVector(gaps, 16)
    assert is_asymmetric(iv.to_selection(0), 8) is expected
    assert iv.is_asymmetric() is expected


def test_window_sum_matches_antipodal_pairs():
    for n in range(2, 9):
        m = 2 * n
        for k in range(3, m + 1):
            for sel in itertools.combinations(range(m), k):
                gaps = [b - a for a, b in zip(sel, sel[1:])] + [sel[0] + m - sel[-1]]
                assert intervals_asymmetric(gaps, n) == is_asymmetric(sel, n)


def test_area_invariant_under_gap_permutations():
    for m, gaps in [(16, (3, 3, 4, 2, 4)), (12, (1, 2, 3, 6)), (14, (1, 1, 2, 3, 3, 4)),
                    (10, (2, 2, 3, 3)), (18, (5, 4, 3, 2, 2, 2))]:
        ds = DiameterSet.evenly_spaced(m // 2)
        base = polygon_area(ds, IntervalVector(gaps, m).to_selection(0))
        for perm in set(itertools.permutations(gaps)):
            area = polygon_area(ds, IntervalVector(perm, m).to_selection(0))
            assert area == pytest.approx(base, abs=1e-12)


def test_swap_inequality_small_cases():
    assert swap_improves(4, 2, 8)
    assert not swap_improves(3, 2, 8)


@settings(max_examples=100, deadline=None)
@given(st.floats(0.0, 3.0), st.integers(3, 9))
def test_rotated_lattice_stays_even(shift, n):
    ds = DiameterSet.evenly_spaced(n)
    rotated = DiameterSet.from_angles([a + shift for a in ds.angles])
    assert rotated.is_even()
    sel = [0, 1, n + 2 if n > 3 else 3]
    assert polygon_area(rotated, sel) == pytest.approx(polygon_area(ds, sel), abs=1e-9)

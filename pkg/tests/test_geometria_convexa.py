# -*- coding: utf-8 -*-
import numpy as np
import pytest
from hypothesis import given
from hypothesis import strategies as st

from geometria_convexa import (HullModel, build_hull, clip_energy, clip_hull, contains,
                               directed_distance, hausdorff, hull2d, hull3d, lp_member,
                               with_recession)
from nucleo_lie import DomainError

SQUARE = [[0.0, 0.0], [1.0, 0.0], [1.0, 1.0], [0.0, 1.0]]
CUBE = [[x, y, z] for x in (0.0, 1.0) for y in (0.0, 1.0) for z in (0.0, 1.0)]

coordinate = st.floats(min_value=-5.0, max_value=5.0, allow_nan=False, allow_infinity=False)
planar_points = st.lists(st.tuples(coordinate, coordinate), min_size=3, max_size=25)


def as_set(rows):
    return {tuple(np.round(r, 12)) for r in np.asarray(rows)}


def test_square_with_center():
    h = hull2d(SQUARE + [[0.5, 0.5]])
    assert as_set(h.extremes) == as_set(SQUARE)
    assert contains(h, [0.5, 0.5])
    assert contains(h, [1.0, 0.5])
    assert h.distance([2.0, 0.5]) == pytest.approx(1.0)
    assert h.distance([2.0, 2.0]) == pytest.approx(np.sqrt(2.0))
    np.testing.assert_allclose(h.centroid(), [0.5, 0.5])


def test_extremes_are_counter_clockwise():
    h = hull2d([[1.0, 1.0], [0.0, 0.0], [0.0, 1.0], [1.0, 0.0]])
    e = h.extremes
    area = 0.5 * sum(e[i, 0] * e[(i + 1) % 4, 1] - e[(i + 1) % 4, 0] * e[i, 1] for i in range(4))
    assert area == pytest.approx(1.0)


def test_collinear_points():
    h = hull2d([[0.0, 0.0], [1.0, 1.0], [2.0, 2.0]])
    assert as_set(h.extremes) == {(0.0, 0.0), (2.0, 2.0)}
    assert h.distance([1.0, 1.0]) == 0.0
    assert h.distance([0.0, 1.0]) == pytest.approx(1.0 / np.sqrt(2.0))
    assert h.distance([3.0, 3.0]) == pytest.approx(np.sqrt(2.0))


def test_single_point_hull():
    h = hull2d([[1.0, 2.0], [1.0, 2.0]])
    assert len(h.extremes) == 1
    assert h.distance([4.0, 6.0]) == pytest.approx(5.0)
    assert contains(h, [1.0, 2.0])


def test_regular_polygon_keeps_every_vertex():
    t = np.linspace(0.0, 2 * np.pi, 64, endpoint=False)
    circle = np.column_stack([np.cos(t), np.sin(t)])
    h = hull2d(np.vstack([circle, 0.3 * circle]))
    assert len(h.extremes) == 64
    assert contains(h, [0.0, 0.0])
    assert not contains(h, [1.01, 0.0])


def test_invalid_input():
    with pytest.raises(DomainError):
        build_hull(np.zeros((0, 2)))
    with pytest.raises(DomainError):
        build_hull(np.zeros((3, 4)))
    with pytest.raises(DomainError):
        hull2d([[0.0, np.inf], [1.0, 1.0]])
    with pytest.raises(DomainError):
        HullModel(4, np.zeros((1, 4)))
    with pytest.raises(DomainError):
        hull2d(SQUARE).distance([0.0, 0.0, 0.0])


@given(planar_points, st.tuples(coordinate, coordinate),
       st.floats(min_value=1e-6, max_value=1.0), st.floats(min_value=0.0, max_value=1.0))
def test_membership_is_monotone_in_tolerance(points, x, tol, extra):
    h = hull2d(points)
    if contains(h, x, tol):
        assert contains(h, x, tol + extra)


@given(planar_points)
def test_input_points_are_members(points):
    h = hull2d(points)
    for p in points:
        assert h.distance(p) <= 1e-9


@given(planar_points, planar_points)
def test_union_hull_contains_both(a, b):
    union = hull2d(a + b)
    for h in (hull2d(a), hull2d(b)):
        assert directed_distance(h, union) <= 1e-9


def test_lp_agrees_with_distance():
    h = hull2d(SQUARE)
    assert lp_member(h, [0.25, 0.75])
    assert not lp_member(h, [1.5, 0.5])
    assert contains(h, [1.0 + 1e-3, 0.5], tol=1e-2)
    assert not contains(h, [1.0 + 1e-3, 0.5], tol=0.0)


def test_hausdorff_examples():
    a = hull2d(SQUARE)
    b = hull2d(np.asarray(SQUARE) + 1.0)
    assert hausdorff(a, a) == 0.0
    assert hausdorff(a, b) == pytest.approx(np.sqrt(2.0))
    inner = hull2d(0.5 * np.asarray(SQUARE) + 0.25)
    assert directed_distance(inner, a) == 0.0
    assert hausdorff(a, inner) == pytest.approx(0.25 * np.sqrt(2.0))
    with pytest.raises(DomainError):
        hausdorff(a, hull3d(CUBE))


def test_cube_3d():
    h = hull3d(CUBE + [[0.5, 0.5, 0.5]])
    assert as_set(h.extremes) == as_set(CUBE)
    assert contains(h, [0.5, 0.5, 0.5])
    assert lp_member(h, [0.2, 0.9, 0.4])
    assert h.distance([2.0, 0.5, 0.5]) == pytest.approx(1.0)
    assert h.distance([2.0, 2.0, 2.0]) == pytest.approx(np.sqrt(3.0))


def test_planar_set_in_3d():
    h = hull3d([[0.0, 0.0, 0.0], [1.0, 0.0, 0.0], [1.0, 1.0, 0.0], [0.0, 1.0, 0.0], [0.5, 0.5, 0.0]])
    assert len(h.extremes) == 4
    assert h.distance([0.5, 0.5, 1.0]) == pytest.approx(1.0)
    assert h.distance([2.0, 0.5, 0.0]) == pytest.approx(1.0)
    assert contains(h, [0.5, 0.5, 0.0])


def test_segment_in_3d():
    h = hull3d([[0.0, 0.0, 0.0], [1.0, 1.0, 1.0], [0.5, 0.5, 0.5]])
    assert len(h.extremes) == 2
    assert h.distance([0.5, 0.5, 0.5]) == 0.0


def test_energy_clip_and_recession():
    points = np.array([[1.0, 0.0], [5.0, 1.0], [7.0, 2.0]])
    np.testing.assert_array_equal(clip_energy(points, 6.0), points[:2])
    lifted = with_recession(np.array([[0.0, 0.0], [1.0, 1.0], [1.0, -1.0]]), 10.0)
    assert lifted.shape == (6, 2)
    h = build_hull(lifted)
    assert contains(h, [9.0, 0.9])
    assert not contains(h, [0.5, 0.9])


def test_hull_clip_matches_half_plane():
    h = clip_hull(hull2d([[0.0, 0.0], [4.0, 0.0], [0.0, 4.0]]), 2.0)
    assert as_set(h.extremes) == {(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 4.0)}
    assert contains(h, [2.0, 1.0])
    assert not contains(h, [2.1, 0.5])


def test_hull_clip_3d_and_edge_cases():
    cube = hull3d(CUBE)
    h = clip_hull(cube, 0.5)
    assert len(h.extremes) == 8
    assert contains(h, [0.5, 1.0, 1.0])
    assert h.distance([1.0, 0.5, 0.5]) == pytest.approx(0.5)
    assert clip_hull(cube, 2.0) is cube
    with pytest.raises(DomainError):
        clip_hull(cube, -1.0)


def test_dump():
    data = hull2d(SQUARE, tol=0.01).to_dict()
    assert data['dim'] == 2 and data['tol'] == 0.01
    assert len(data['extremes']) == 4

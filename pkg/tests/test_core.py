import numpy as np
import pytest
from hypothesis import given, strategies as st

from gallai_lattice import (InvalidInput, OutOfBounds, Point, RainbowMode, Window,
                            color_multiset, doubled_area, is_monochromatic, is_rainbow,
                            make_diagonal_d3, render)
from gallai_lattice.core import ccw_order

from oracles import shoelace2


def test_doubled_area_unit_triangle():
    assert doubled_area([(0, 0), (1, 0), (0, 1)]) == 1


def test_doubled_area_collinear_is_zero():
    assert doubled_area([(0, 0), (2, 0), (4, 0)]) == 0


def test_doubled_area_parallelogram():
    # 3 * 2 base-height, doubled
    assert doubled_area([(0, 0), (3, 0), (4, 2), (1, 2)]) == 12


@pytest.mark.parametrize("n", [0, 1, 2, 5])
def test_doubled_area_rejects_vertex_count(n):
    with pytest.raises(InvalidInput):
        doubled_area([(i, i * i) for i in range(n)])


def test_color_multiset_d3():
    w = render(make_diagonal_d3(), (0, 0), 2, 1)
    assert sorted(color_multiset([(0, 0), (1, 0)], w)) == [0, 2]
    assert color_multiset([], w) == []


def test_color_multiset_constant():
    w = Window.from_rows([[4, 4], [4, 4]], palette=5)
    assert color_multiset([(0, 0), (1, 0), (1, 1), (0, 1)], w) == [4, 4, 4, 4]


def test_out_of_bounds():
    w = Window.from_rows([[0, 1]], origin=(5, 5))
    assert w.color((6, 5)) == 1
    with pytest.raises(OutOfBounds):
        w.color((0, 0))
    with pytest.raises(OutOfBounds):
        is_monochromatic([(5, 6)], w)


def test_rainbow_modes():
    w = Window.from_rows([[0, 1, 2, 0]], palette=3)
    three = [(0, 0), (1, 0), (2, 0)]
    four = three + [(3, 0)]
    assert is_rainbow(three, w, RainbowMode.CANONICAL)
    assert is_rainbow(four, w, RainbowMode.CANONICAL)
    assert not is_rainbow(four, w, RainbowMode.STRICT)


def test_is_rainbow_needs_points():
    w = Window.from_rows([[0]])
    with pytest.raises(InvalidInput):
        is_rainbow([], w)


def test_monochromatic():
    w = Window.from_rows([[0, 0, 1]], palette=2)
    assert is_monochromatic([(2, 0)], w)
    assert is_monochromatic([(0, 0), (1, 0)], w)
    assert not is_monochromatic([(1, 0), (2, 0)], w)


def test_window_validation():
    with pytest.raises(InvalidInput):
        Window(Point(0, 0), 2, np.array([[0, 2]]))
    with pytest.raises(InvalidInput):
        Window(Point(0, 0), 2, np.zeros((0, 3), dtype=int))


def test_window_is_read_only():
    w = Window.from_rows([[0, 1]])
    with pytest.raises(ValueError):
        w.cells[0, 0] = 1


def test_ccw_order_quad():
    assert ccw_order([(3, 2), (0, 0), (1, 2), (4, 0)]) == [(0, 0), (4, 0), (3, 2), (1, 2)]


coords = st.integers(-50, 50)
point = st.tuples(coords, coords)


@given(st.lists(point, min_size=3, max_size=4), point)
def test_area_translation_invariant(pts, shift):
    moved = [(x + shift[0], y + shift[1]) for x, y in pts]
    assert doubled_area(pts) == doubled_area(moved)


@given(st.lists(point, min_size=3, max_size=4), st.integers(0, 3))
def test_area_rotation_and_reversal_invariant(pts, k):
    k %= len(pts)
    assert doubled_area(pts) == doubled_area(pts[k:] + pts[:k]) == doubled_area(pts[::-1])


@given(st.lists(point, min_size=3, max_size=4))
def test_area_matches_reference_shoelace(pts):
    assert doubled_area(pts) == shoelace2(pts)


@given(point, st.integers(1, 30), st.integers(1, 30))
def test_rectangle_area(p, w, h):
    x, y = p
    assert doubled_area([(x, y), (x + w, y), (x + w, y + h), (x, y + h)]) == 2 * w * h


colorings = st.integers(1, 6).flatmap(
    lambda r: st.tuples(st.just(r), st.lists(st.integers(0, r - 1), min_size=1, max_size=8)))


@given(colorings)
def test_strict_implies_canonical(data):
    r, colors = data
    w = Window.from_rows([colors], palette=r)
    pts = [(x, 0) for x in range(len(colors))]
    if len(pts) <= r and is_rainbow(pts, w, RainbowMode.STRICT):
        assert is_rainbow(pts, w, RainbowMode.CANONICAL)


@given(colorings)
def test_mono_and_strict_rainbow_exclusive(data):
    r, colors = data
    w = Window.from_rows([colors], palette=r)
    pts = [(x, 0) for x in range(len(colors))]
    if len(pts) >= 2:
        assert not (is_monochromatic(pts, w) and is_rainbow(pts, w, RainbowMode.STRICT))

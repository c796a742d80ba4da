import numpy as np
import pytest
from hypothesis import given, settings, strategies as st

from gallai_lattice import (InvalidParameters, OutOfBounds, StoredGrid, Window,
                            make_column_exception, make_diagonal_d3, make_parity,
                            make_rainbow_feasible_random, make_striped, render)
from gallai_lattice.search import rainbow_ap3_in

coords = st.integers(-200, 200)


def test_column_exception_values():
    rule = make_column_exception(5, 4)
    assert rule.color((3, 7)) == 0
    assert rule.color((0, 5)) == 1 + (1 % 3)
    assert rule.color((0, 0)) == 1
    assert rule.color((0, -5)) == 1 + (-1 % 3)
    assert rule.color((0, 3)) == 0


@pytest.mark.parametrize("t, r", [(0, 4), (5, 2)])
def test_column_exception_rejects(t, r):
    with pytest.raises(InvalidParameters):
        make_column_exception(t, r)


def test_striped_values_and_render():
    rule = make_striped([0, 1, 2])
    assert rule.color((9, 4)) == 1
    w = render(rule, (0, 0), 2, 4)
    assert w.cells.tolist() == [[0, 0], [1, 1], [2, 2], [0, 0]]


@pytest.mark.parametrize("colors", [[0, 1, 2, 1], [0, 1], [0, 0, 1], [0, 1, 0, 2]])
def test_striped_rejects(colors):
    with pytest.raises(InvalidParameters):
        make_striped(colors)


def test_striped_accepts_longer_period():
    rule = make_striped([0, 1, 2, 3, 1, 2, 3], r=4)
    assert rule.palette == 4


@given(coords, coords)
def test_striped_neighbouring_lines_differ(x, y):
    rule = make_striped([0, 1, 2, 3, 1, 2, 3], r=4)
    assert rule.color((x, y)) != rule.color((x, y + 1))
    assert rule.color((x, y)) != rule.color((x, y + 2))


def test_d3_values():
    rule = make_diagonal_d3()
    assert [rule.color(p) for p in [(0, 0), (1, 0), (0, 2), (1, 2)]] == [0, 2, 2, 1]
    assert render(rule, (0, 0), 3, 1).cells.tolist() == [[0, 2, 1]]
    assert len({rule.color(p) for p in [(0, 0), (1, 0), (0, 2), (1, 2)]}) == 3


@given(coords, coords)
def test_d3_diagonal_translation(x, y):
    rule = make_diagonal_d3()
    assert rule.color((x, y)) == rule.color((x + 1, y + 1))


def test_parity_values():
    rule = make_parity(4)
    assert rule.color((0, 0)) == 3
    assert rule.color((1, 2)) == 0
    two = make_parity(2)
    assert {two.color((x, y)) for x in range(5) for y in range(5) if (x + y) % 2} == {0}
    assert {two.color((x, y)) for x in range(5) for y in range(5) if (x + y) % 2 == 0} == {1}
    with pytest.raises(InvalidParameters):
        make_parity(1)


@given(st.integers(2, 9), coords, coords)
def test_parity_top_color_exactly_on_even_sums(r, x, y):
    c = make_parity(r).color((x, y))
    assert (c == r - 1) == ((x + y) % 2 == 0)
    assert 0 <= c < r


def test_rf_random_blocks_are_balanced():
    rule = make_rainbow_feasible_random(6, 1234)
    w = render(rule, (-12, -3), 60, 10)
    for row in w.cells:
        for b in range(0, 60, 6):
            assert sorted(np.bincount(row[b:b + 6], minlength=3).tolist()) == [2, 2, 2]


def test_rf_random_meets_feasibility_bound():
    # 2 copies per color in a block of 6, against the bound (6 + 4) / 6
    assert 6 // 3 >= (6 + 4) / 6


def test_rf_random_deterministic():
    a = render(make_rainbow_feasible_random(9, 77), (3, -4), 40, 7)
    b = render(make_rainbow_feasible_random(9, 77), (3, -4), 40, 7)
    c = render(make_rainbow_feasible_random(9, 78), (3, -4), 40, 7)
    assert a == b
    assert a != c


def test_rf_random_pointwise_matches_render():
    rule = make_rainbow_feasible_random(6, 5)
    w = render(rule, (-7, -2), 20, 4)
    assert all(rule.color(p) == w.color(p) for p in w.points())


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2**64 - 1), st.sampled_from([6, 9, 12]))
def test_rf_random_every_segment_has_rainbow_ap3(seed, n):
    w = render(make_rainbow_feasible_random(n, seed), (0, 0), 5 * n, 5)
    for row in w.cells:
        for s in range(5):
            assert rainbow_ap3_in(row[s * n:(s + 1) * n])


@pytest.mark.parametrize("n, seed", [(7, 0), (3, 0), (6, -1), (6, 2**64)])
def test_rf_random_rejects(n, seed):
    with pytest.raises(InvalidParameters):
        make_rainbow_feasible_random(n, seed)


def test_stored_grid_round_trip_and_idempotence():
    w = render(make_diagonal_d3(), (2, 3), 5, 4)
    again = render(StoredGrid(w), (2, 3), 5, 4)
    assert again == w
    assert render(StoredGrid(again), (2, 3), 5, 4) == again


def test_stored_grid_policies():
    w = Window.from_rows([[0, 1, 2]])
    with pytest.raises(OutOfBounds):
        StoredGrid(w).color((3, 0))
    periodic = StoredGrid(w, "periodic")
    assert [periodic.color((x, 7)) for x in range(-3, 4)] == [0, 1, 2, 0, 1, 2, 0]
    with pytest.raises(InvalidParameters):
        StoredGrid(w, "clamp")


def test_render_rejects_empty():
    with pytest.raises(InvalidParameters):
        render(make_diagonal_d3(), (0, 0), 0, 3)

import numpy as np
import pytest

from gallai_lattice import (InvalidParameters, Window, doubled_area, make_striped, render)
from gallai_lattice.search import revalidate
from gallai_lattice.verify import DichotomyReport, verify_dichotomy


def test_striped_is_unsatisfied_with_caveat():
    w = render(make_striped([0, 1, 2]), (0, 0), 30, 30)
    rep = verify_dichotomy(w, [2, 4])
    assert rep.found_rainbow_triangle is None
    assert rep.mono_rect_areas_found[2] is None
    assert not rep.satisfied
    assert rep.window_scoped and rep.caveat


def test_three_constant_lines_give_triangle():
    w = Window.from_rows([[0] * 4, [1] * 4, [2] * 4])
    rep = verify_dichotomy(w, [2])
    tri = rep.found_rainbow_triangle
    assert tri is not None and rep.satisfied
    assert doubled_area(tri.vertices) == 1
    assert revalidate(tri, w)
    # a concrete doubled-area-1 rainbow triangle across the three lines
    assert doubled_area([(0, 0), (1, 1), (1, 2)]) == 1


@pytest.mark.parametrize("areas", [[2], [2, 4, 6], [8]])
def test_constant_window_satisfied(areas):
    w = Window.from_rows([[1] * 8] * 8, palette=3)
    rep = verify_dichotomy(w, areas)
    assert rep.found_rainbow_triangle is None
    assert rep.satisfied
    for a, c in rep.mono_rect_areas_found.items():
        assert c.doubled_area == 2 * a and revalidate(c, w)


@pytest.mark.parametrize("areas", [[3], [2, 5], [], [0], [-2]])
def test_rejects_bad_areas(areas):
    with pytest.raises(InvalidParameters):
        verify_dichotomy(Window.from_rows([[0, 1, 2]] * 3), areas)


def test_rejects_two_colors():
    with pytest.raises(InvalidParameters):
        verify_dichotomy(Window.from_rows([[0, 1]] * 2), [2])


def test_random_reports_revalidate_and_round_trip():
    rng = np.random.default_rng(7)
    for _ in range(10):
        w = Window.from_rows(rng.integers(0, 3, (12, 12)).tolist(), palette=3)
        rep = verify_dichotomy(w, [2, 4])
        configs = [rep.found_rainbow_triangle, *rep.mono_rect_areas_found.values()]
        assert all(revalidate(c, w) for c in configs if c is not None)
        assert DichotomyReport.from_dict(rep.to_dict()) == rep

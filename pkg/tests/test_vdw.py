import pytest

from gallai_lattice import InvalidParameters
from gallai_lattice.verify import vdw_number
from gallai_lattice.verify.vdw import longest_ap_free_coloring

import oracles


def test_w32():
    assert vdw_number(3, 2, 20) == 9


def test_w32_below_cap():
    assert vdw_number(3, 2, 8) is None


def test_w32_agrees_with_exhaustive_product():
    assert oracles.every_coloring_has_mono_kap(9, 3, 2)
    assert not oracles.every_coloring_has_mono_kap(8, 3, 2)


@pytest.mark.parametrize("k, r, expected", [(4, 2, 35), (3, 3, 27)])
def test_classical_values(k, r, expected):
    assert vdw_number(k, r, expected + 3) == expected
    assert vdw_number(k, r, expected - 1) is None


@pytest.mark.parametrize("cap", range(9, 16))
def test_monotone_in_cap(cap):
    assert vdw_number(3, 2, cap) == 9


def test_longest_coloring_is_good():
    col = longest_ap_free_coloring(4, 2, 60)
    assert len(col) == 34
    assert not oracles.has_mono_kap(col, 4)


@pytest.mark.parametrize("k, r, cap", [(2, 2, 10), (3, 1, 10), (3, 2, 2)])
def test_rejects(k, r, cap):
    with pytest.raises(InvalidParameters):
        vdw_number(k, r, cap)

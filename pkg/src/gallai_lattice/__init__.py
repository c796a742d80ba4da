"""Search and verification of monochromatic/rainbow patterns on lattice windows."""

from .colorings import (ColoringRule, StoredGrid, make_column_exception, make_diagonal_d3,
                        make_parity, make_rainbow_feasible_random, make_striped, render)
from .core import Point, RainbowMode, Window, color_multiset, doubled_area, is_monochromatic, \
    is_rainbow
from .errors import BudgetExceeded, InvalidInput, InvalidParameters, LatticeError, OutOfBounds
from .search import (Ap3Triple, Configuration, Kind, SearchReport, find_h_quads,
                     find_mono_rects, find_rainbow_ap3, find_rainbow_triangles,
                     rect_color_histogram, revalidate)

__version__ = "0.1.0"

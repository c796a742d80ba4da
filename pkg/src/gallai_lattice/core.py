"""Points, windows, exact lattice areas and the color predicates.

Areas are carried doubled so every lattice polygon has an integer area.
Colors are plain ``int`` indices in ``[0, palette)``.
"""

from __future__ import annotations

import enum
import functools
from dataclasses import dataclass, field
from typing import Iterable, NamedTuple, Sequence

import numpy as np

from .errors import InvalidInput, InvalidParameters, OutOfBounds


class Point(NamedTuple):
    """A point of the integer lattice."""

    x: int
    y: int

    def __add__(self, other):  # type: ignore[override]
        return Point(self.x + other[0], self.y + other[1])

    def __sub__(self, other):
        return Point(self.x - other[0], self.y - other[1])


class RainbowMode(enum.Enum):
    """How "rainbow" is judged for a point set.

    CANONICAL: the set carries ``min(palette, len(points))`` distinct colors.
    STRICT: every point carries a different color.
    """

    CANONICAL = "canonical"
    STRICT = "strict"


@dataclass(frozen=True, eq=False)
class Window:
    """A finite rectangle of the lattice with one color per cell.

    ``cells[row, col]`` holds the color of ``(origin.x + col, origin.y + row)``;
    row 0 is the bottom row. The array is made read-only on construction.
    """

    origin: Point
    palette: int
    cells: np.ndarray = field(repr=False)

    def __post_init__(self):
        cells = np.array(self.cells, dtype=np.int64, copy=True)
        if cells.ndim != 2 or cells.shape[0] < 1 or cells.shape[1] < 1:
            raise InvalidInput(f"window needs a non-empty 2-d cell array, got shape {cells.shape}")
        if self.palette < 1:
            raise InvalidParameters(f"palette size must be >= 1, got {self.palette}")
        if cells.min() < 0 or cells.max() >= self.palette:
            raise InvalidInput(f"cell colors must lie in [0, {self.palette})")
        cells.setflags(write=False)
        object.__setattr__(self, "cells", cells)
        object.__setattr__(self, "origin", Point(*self.origin))

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]], palette: int | None = None,
                  origin: tuple[int, int] = (0, 0)) -> "Window":
        """Build a window from rows listed bottom (y = origin.y) first."""
        cells = np.asarray(rows, dtype=np.int64)
        if palette is None:
            palette = int(cells.max()) + 1 if cells.size else 1
        return cls(Point(*origin), palette, cells)

    @property
    def width(self) -> int:
        return self.cells.shape[1]

    @property
    def height(self) -> int:
        return self.cells.shape[0]

    @property
    def x_range(self) -> range:
        return range(self.origin.x, self.origin.x + self.width)

    @property
    def y_range(self) -> range:
        return range(self.origin.y, self.origin.y + self.height)

    def contains(self, p) -> bool:
        return (0 <= p[0] - self.origin.x < self.width
                and 0 <= p[1] - self.origin.y < self.height)

    def color(self, p) -> int:
        if not self.contains(p):
            raise OutOfBounds(f"point {tuple(p)} outside window at {tuple(self.origin)} "
                              f"of size {self.width}x{self.height}")
        return int(self.cells[p[1] - self.origin.y, p[0] - self.origin.x])

    def row(self, y: int) -> np.ndarray:
        """Colors of the window's cells on line ``y``, left to right."""
        if not 0 <= y - self.origin.y < self.height:
            raise OutOfBounds(f"row {y} outside window rows {self.y_range}")
        return self.cells[y - self.origin.y]

    def points(self) -> Iterable[Point]:
        """All window points in row-major order (y, then x)."""
        for y in self.y_range:
            for x in self.x_range:
                yield Point(x, y)

    def __eq__(self, other):
        if not isinstance(other, Window):
            return NotImplemented
        return (self.origin == other.origin and self.palette == other.palette
                and np.array_equal(self.cells, other.cells))

    def __hash__(self):
        return hash((self.origin, self.palette, self.cells.tobytes(), self.cells.shape))


def doubled_area(vertices: Sequence) -> int:
    """Twice the area of a triangle or quadrilateral (integer shoelace).

    Quadrilateral vertices must be given in traversal order.
    """
    if len(vertices) not in (3, 4):
        raise InvalidInput(f"expected 3 or 4 vertices, got {len(vertices)}")
    total = 0
    n = len(vertices)
    for i in range(n):
        x0, y0 = vertices[i]
        x1, y1 = vertices[(i + 1) % n]
        total += x0 * y1 - x1 * y0
    return abs(total)


def color_multiset(points: Iterable, w: Window) -> list[int]:
    return [w.color(p) for p in points]


def is_monochromatic(points: Sequence, w: Window) -> bool:
    return len(set(color_multiset(points, w))) == 1


def is_rainbow(points: Sequence, w: Window, mode: RainbowMode = RainbowMode.CANONICAL) -> bool:
    if not points:
        raise InvalidInput("is_rainbow needs at least one point")
    colors = color_multiset(points, w)
    return colors_are_rainbow(colors, w.palette, mode)


def colors_are_rainbow(colors: Sequence[int], palette: int, mode: RainbowMode) -> bool:
    """The rainbow test on an already-collected color list."""
    distinct = len(set(colors))
    if mode is RainbowMode.STRICT:
        return distinct == len(colors)
    return distinct == min(palette, len(colors))


def ccw_order(vertices: Sequence) -> list[Point]:
    """Sort a triangle's or convex quadrilateral's vertices counterclockwise.

    Starts at the lowest (then leftmost) vertex. Collinear input is returned
    in (y, x) order.
    """
    pts = [Point(*v) for v in vertices]
    start = min(pts, key=lambda p: (p.y, p.x))
    rest = list(pts)
    rest.remove(start)

    def cmp(a, b):
        ax, ay = a.x - start.x, a.y - start.y
        bx, by = b.x - start.x, b.y - start.y
        cross = ax * by - ay * bx
        if cross:
            return -1 if cross > 0 else 1
        return (ax * ax + ay * ay) - (bx * bx + by * by)

    rest.sort(key=functools.cmp_to_key(cmp))
    return [start] + rest

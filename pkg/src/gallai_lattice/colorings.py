"""Total colorings of the integer lattice and their rendering into windows.

Every rule answers ``color(p)`` for any lattice point and renders rectangular
blocks through the vectorized ``colors(xs, ys)``.
"""

from __future__ import annotations

import functools
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .core import Point, Window
from .errors import InvalidParameters, OutOfBounds

SEED_MASK = (1 << 64) - 1


class ColoringRule:
    """Base class for lattice colorings; subclasses set ``palette``."""

    palette: int

    def colors(self, xs: np.ndarray, ys: np.ndarray) -> np.ndarray:
        raise NotImplementedError

    def color(self, p) -> int:
        return int(self.colors(np.array([p[0]]), np.array([p[1]]))[0])

    def __call__(self, p) -> int:
        return self.color(p)


@dataclass(frozen=True)
class ColumnException(ColoringRule):
    """One background color, except the points (0, t*m) on the y axis."""

    t: int
    palette: int
    base: int = 0

    def colors(self, xs, ys):
        xs, ys = np.broadcast_arrays(np.asarray(xs), np.asarray(ys))
        out = np.full(xs.shape, self.base, dtype=np.int64)
        special = (xs == 0) & (ys % self.t == 0)
        m = ys[special] // self.t
        out[special] = 1 + (m % (self.palette - 1))
        return out


@dataclass(frozen=True)
class Striped(ColoringRule):
    """Each horizontal line gets ``line_colors[y mod p]``."""

    line_colors: tuple[int, ...]
    palette: int

    def colors(self, xs, ys):
        xs, ys = np.broadcast_arrays(np.asarray(xs), np.asarray(ys))
        table = np.asarray(self.line_colors, dtype=np.int64)
        return table[ys % len(table)]


@dataclass(frozen=True)
class Diagonal(ColoringRule):
    """(x, y) -> (y - x) mod 3."""

    palette: int = 3

    def colors(self, xs, ys):
        xs, ys = np.broadcast_arrays(np.asarray(xs), np.asarray(ys))
        return ((ys - xs) % 3).astype(np.int64)


@dataclass(frozen=True)
class Parity(ColoringRule):
    """Color r-1 on even coordinate sums, (x + y) mod (r - 1) elsewhere."""

    palette: int

    def colors(self, xs, ys):
        xs, ys = np.broadcast_arrays(np.asarray(xs), np.asarray(ys))
        s = xs + ys
        return np.where(s % 2 == 0, self.palette - 1, s % (self.palette - 1)).astype(np.int64)


@dataclass(frozen=True)
class StoredGrid(ColoringRule):
    """A window extended to the lattice by an out-of-bounds policy.

    ``policy`` is ``"error"`` (lookups outside the window raise) or
    ``"periodic"`` (the window tiles the plane).
    """

    window: Window
    policy: str = "error"

    def __post_init__(self):
        if self.policy not in ("error", "periodic"):
            raise InvalidParameters(f"unknown out-of-bounds policy {self.policy!r}")

    @property
    def palette(self) -> int:  # type: ignore[override]
        return self.window.palette

    def colors(self, xs, ys):
        xs, ys = np.broadcast_arrays(np.asarray(xs), np.asarray(ys))
        w = self.window
        cols = xs - w.origin.x
        rows = ys - w.origin.y
        if self.policy == "periodic":
            return w.cells[rows % w.height, cols % w.width]
        if cols.size and (cols.min() < 0 or cols.max() >= w.width
                          or rows.min() < 0 or rows.max() >= w.height):
            raise OutOfBounds("stored grid queried outside its bounds")
        return w.cells[rows, cols]


def _zigzag(v: int) -> int:
    return 2 * v if v >= 0 else -2 * v - 1


@functools.lru_cache(maxsize=65536)
def _balanced_block(n: int, seed: int, y: int, block: int) -> np.ndarray:
    seq = np.random.SeedSequence([seed & SEED_MASK, _zigzag(y), _zigzag(block)])
    rng = np.random.default_rng(seq)
    out = rng.permutation(np.repeat(np.arange(3, dtype=np.int64), n // 3))
    out.setflags(write=False)
    return out


@dataclass(frozen=True)
class RainbowFeasibleRandom(ColoringRule):
    """Lines tiled by aligned length-n blocks, each a shuffled balanced 3-coloring."""

    n: int
    seed: int
    palette: int = 3

    def colors(self, xs, ys):
        xs, ys = np.broadcast_arrays(np.asarray(xs), np.asarray(ys))
        out = np.empty(xs.shape, dtype=np.int64)
        flat_x, flat_y, flat_out = xs.ravel(), ys.ravel(), out.reshape(-1)
        blocks = flat_x // self.n
        for i, (x, y, b) in enumerate(zip(flat_x.tolist(), flat_y.tolist(), blocks.tolist())):
            flat_out[i] = _balanced_block(self.n, self.seed, y, b)[x - b * self.n]
        return out

    def render_rows(self, origin, width: int, height: int) -> np.ndarray:
        """Fast path for ``render``: copies whole blocks instead of single cells."""
        x0, y0 = origin
        first, last = x0 // self.n, (x0 + width - 1) // self.n
        cells = np.empty((height, width), dtype=np.int64)
        for r in range(height):
            line = np.concatenate([_balanced_block(self.n, self.seed, y0 + r, b)
                                   for b in range(first, last + 1)])
            off = x0 - first * self.n
            cells[r] = line[off:off + width]
        return cells


def make_column_exception(t: int, r: int) -> ColumnException:
    if t < 1:
        raise InvalidParameters(f"t must be >= 1, got {t}")
    if r < 3:
        raise InvalidParameters(f"column-exception coloring needs r >= 3, got {r}")
    return ColumnException(t, r)


def make_striped(line_colors: Sequence[int], r: int | None = None) -> Striped:
    colors = tuple(int(c) for c in line_colors)
    p = len(colors)
    if p < 3:
        raise InvalidParameters(f"striped coloring needs period >= 3, got {p}")
    if r is None:
        r = max(colors) + 1
    if min(colors) < 0 or max(colors) >= r:
        raise InvalidParameters(f"line colors must lie in [0, {r})")
    for i in range(p):
        window = {colors[i], colors[(i + 1) % p], colors[(i + 2) % p]}
        if len(window) != 3:
            raise InvalidParameters(
                f"lines {i}, {(i + 1) % p}, {(i + 2) % p} (cyclically) repeat a color: {colors}")
    return Striped(colors, r)


def make_diagonal_d3() -> Diagonal:
    return Diagonal()


def make_parity(r: int) -> Parity:
    if r < 2:
        raise InvalidParameters(f"parity coloring needs r >= 2, got {r}")
    return Parity(r)


def make_rainbow_feasible_random(n: int, seed: int) -> RainbowFeasibleRandom:
    if n < 6 or n % 3:
        raise InvalidParameters(f"segment length must be >= 6 and divisible by 3, got {n}")
    if not 0 <= seed <= SEED_MASK:
        raise InvalidParameters("seed must be a 64-bit unsigned integer")
    return RainbowFeasibleRandom(n, seed)


def render(rule: ColoringRule, origin=(0, 0), width: int = 1, height: int = 1) -> Window:
    if width < 1 or height < 1:
        raise InvalidParameters(f"window size must be positive, got {width}x{height}")
    origin = Point(*origin)
    if isinstance(rule, RainbowFeasibleRandom):
        cells = rule.render_rows(origin, width, height)
    else:
        ys, xs = np.mgrid[origin.y:origin.y + height, origin.x:origin.x + width]
        cells = rule.colors(xs, ys)
    return Window(origin, rule.palette, cells)

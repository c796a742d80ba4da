"""Grid text format and PPM export.

Grid format::

    width height r
    c c c ...      <- row y = 0 (bottom)
    ...            <- height rows in total, y increasing

Parsing is strict: wrong counts, non-integers or any index >= r are errors.
"""

from __future__ import annotations

import os
from pathlib import Path

import numpy as np

from .core import Point, Window
from .errors import InvalidInput

# fixed 8-entry palette; colors beyond 7 wrap around
PPM_PALETTE = (
    (230, 25, 75),
    (60, 180, 75),
    (0, 130, 200),
    (255, 225, 25),
    (145, 30, 180),
    (245, 130, 48),
    (70, 240, 240),
    (0, 0, 0),
)


def format_grid(w: Window) -> str:
    lines = [f"{w.width} {w.height} {w.palette}"]
    lines.extend(" ".join(str(int(c)) for c in row) for row in w.cells)
    return "\n".join(lines) + "\n"


def parse_grid(text: str, origin=(0, 0)) -> Window:
    lines = [ln for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise InvalidInput("empty grid file")
    try:
        header = [int(tok) for tok in lines[0].split()]
    except ValueError as exc:
        raise InvalidInput(f"bad grid header {lines[0]!r}") from exc
    if len(header) != 3:
        raise InvalidInput(f"grid header needs 'width height r', got {lines[0]!r}")
    width, height, r = header
    if width < 1 or height < 1 or r < 1:
        raise InvalidInput(f"grid header values must be positive, got {header}")
    if len(lines) - 1 != height:
        raise InvalidInput(f"expected {height} rows, found {len(lines) - 1}")
    rows = []
    for y, ln in enumerate(lines[1:]):
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError as exc:
            raise InvalidInput(f"row {y}: non-integer color") from exc
        if len(row) != width:
            raise InvalidInput(f"row {y}: expected {width} colors, found {len(row)}")
        bad = [c for c in row if not 0 <= c < r]
        if bad:
            raise InvalidInput(f"row {y}: color {bad[0]} outside palette of size {r}")
        rows.append(row)
    return Window(Point(*origin), r, np.asarray(rows, dtype=np.int64))


def read_grid(path: str | os.PathLike, origin=(0, 0)) -> Window:
    return parse_grid(Path(path).read_text(), origin)


def write_grid(w: Window, path: str | os.PathLike) -> None:
    Path(path).write_text(format_grid(w))


def format_ppm(w: Window) -> str:
    """P3 text image, one pixel per cell, highest row at the top."""
    out = ["P3", f"{w.width} {w.height}", "255"]
    for row in w.cells[::-1]:
        out.append(" ".join("%d %d %d" % PPM_PALETTE[int(c) % len(PPM_PALETTE)] for c in row))
    return "\n".join(out) + "\n"


def write_ppm(w: Window, path: str | os.PathLike) -> None:
    Path(path).write_text(format_ppm(w))

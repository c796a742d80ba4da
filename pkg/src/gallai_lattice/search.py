"""Finders for monochromatic and rainbow configurations of a given area.

All finders sweep a window exhaustively (unless documented otherwise), count
every match exactly and return the first ``limit`` matches in a fixed
lexicographic order, so results never depend on the worker count.
"""

from __future__ import annotations

import enum
import time
from dataclasses import dataclass, field
from typing import Iterable, Sequence

import numpy as np

from .core import Point, RainbowMode, Window, ccw_order, colors_are_rainbow, doubled_area
from .errors import InvalidInput, InvalidParameters, OutOfBounds
from .parallel import chunk_range, ordered_map

# windows with at most this many points get the full O(n^3) triangle sweep
FULL_TRIANGLE_SWEEP_MAX_POINTS = 600


class Kind(enum.Enum):
    MONO_RECT = "mono-rect"
    RAINBOW_TRIANGLE = "rainbow-triangle"
    MONO_PARALLELOGRAM_H = "mono-parallelogram"
    RAINBOW_TRAPEZOID_H = "rainbow-trapezoid"
    RAINBOW_PARALLELOGRAM_H = "rainbow-parallelogram"
    RAINBOW_AP3 = "rainbow-ap3"


@dataclass(frozen=True)
class Configuration:
    """A found pattern: its kind, vertices (counterclockwise), doubled area and colors."""

    kind: Kind
    vertices: tuple[Point, ...]
    doubled_area: int
    colors: tuple[int, ...]

    @classmethod
    def build(cls, kind: Kind, vertices: Iterable, source) -> "Configuration":
        """Make a configuration, reading colors from ``source`` (window or rule)."""
        verts = tuple(Point(*v) for v in vertices)
        area = 0 if kind is Kind.RAINBOW_AP3 else doubled_area(verts)
        return cls(kind, verts, area, tuple(source.color(v) for v in verts))

    def to_dict(self) -> dict:
        return {
            "kind": self.kind.value,
            "vertices": [[int(v.x), int(v.y)] for v in self.vertices],
            "doubled_area": int(self.doubled_area),
            "colors": [int(c) for c in self.colors],
        }

    @classmethod
    def from_dict(cls, data: dict) -> "Configuration":
        try:
            return cls(Kind(data["kind"]), tuple(Point(int(x), int(y)) for x, y in data["vertices"]),
                       int(data["doubled_area"]), tuple(int(c) for c in data["colors"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput(f"bad configuration record: {data!r}") from exc


@dataclass(frozen=True, order=True)
class Ap3Triple:
    """A rainbow 3-AP inside a segment: start offset, difference, color pattern."""

    x: int
    d: int
    sigma: tuple[int, int, int]

    def __post_init__(self):
        if self.x < 0 or self.d < 1:
            raise InvalidParameters(f"bad AP3 triple offset/difference ({self.x}, {self.d})")
        if len(self.sigma) != 3 or len(set(self.sigma)) != 3:
            raise InvalidParameters(f"sigma must hold 3 distinct colors, got {self.sigma}")

    def fits(self, n: int) -> bool:
        return self.x + 2 * self.d <= n - 1

    def points(self, start_x: int, y: int) -> tuple[Point, Point, Point]:
        """The AP's three points for a segment whose first cell is ``(start_x, y)``."""
        a = start_x + self.x
        return Point(a, y), Point(a + self.d, y), Point(a + 2 * self.d, y)

    def to_dict(self) -> dict:
        return {"x": self.x, "d": self.d, "sigma": list(self.sigma)}

    @classmethod
    def from_dict(cls, data: dict) -> "Ap3Triple":
        return cls(int(data["x"]), int(data["d"]), tuple(int(c) for c in data["sigma"]))


@dataclass
class SearchReport:
    query: str
    witnesses: list[Configuration] = field(default_factory=list)
    total_count: int | None = None
    exhaustive: bool = False
    elapsed_ms: int = 0

    @property
    def found(self) -> bool:
        return bool(self.witnesses) or bool(self.total_count)

    def to_dict(self, timing: bool = True) -> dict:
        return {
            "query": self.query,
            "witnesses": [c.to_dict() for c in self.witnesses],
            "total_count": self.total_count,
            "exhaustive": self.exhaustive,
            "elapsed_ms": self.elapsed_ms if timing else 0,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "SearchReport":
        try:
            total = data["total_count"]
            return cls(str(data.get("query", "")),
                       [Configuration.from_dict(c) for c in data["witnesses"]],
                       None if total is None else int(total),
                       bool(data["exhaustive"]), int(data["elapsed_ms"]))
        except (KeyError, TypeError, ValueError) as exc:
            raise InvalidInput("bad search report record") from exc


def _ms_since(t0: float) -> int:
    return int(round((time.perf_counter() - t0) * 1000))


def _check_limit(limit):
    if limit is not None and limit < 0:
        raise InvalidParameters(f"limit must be >= 0, got {limit}")


def _merge(parts, limit):
    """Concatenate ordered (count, matches) chunk results, keeping the first ``limit``."""
    total = 0
    matches = []
    for count, found in parts:
        total += count
        matches.extend(found)
    if limit is not None:
        matches = matches[:limit]
    return total, matches


def _divisor_pairs(n: int) -> list[tuple[int, int]]:
    return [(a, n // a) for a in range(1, n + 1) if n % a == 0]


# -- monochromatic rectangles ------------------------------------------------

def _rect_corners(cells, w, h):
    """The four corner-color arrays for every placement of a w x h rectangle."""
    return (cells[:-h, :-w], cells[:-h, w:], cells[h:, w:], cells[h:, :-w])


def _mono_rect_chunk(args):
    w, area, y_lo, y_hi, limit = args
    count = 0
    found = []
    for rw, rh in _divisor_pairs(area):
        y_max = min(y_hi, w.height - rh)
        if rw >= w.width or y_max <= y_lo:
            continue
        a, b, c, d = _rect_corners(w.cells[y_lo:y_max + rh], rw, rh)
        mask = (a == b) & (a == c) & (a == d)
        count += int(mask.sum())
        ys, xs = np.nonzero(mask)
        found.extend(zip((ys + y_lo).tolist(), xs.tolist(), [rw] * len(xs), [rh] * len(xs)))
    found.sort()
    if limit is not None:
        found = found[:limit]
    return count, found


def find_mono_rects(w: Window, area: int, limit: int | None = 10, jobs: int = 1) -> SearchReport:
    """Monochromatic axis-parallel rectangles of the given (plain) area.

    Ordered by (lower-left y, lower-left x, width).
    """
    if area < 1:
        raise InvalidParameters(f"area must be >= 1, got {area}")
    _check_limit(limit)
    t0 = time.perf_counter()
    chunks = [(w, area, lo, hi, limit) for lo, hi in chunk_range(0, w.height, max(1, jobs) * 4)]
    total, matches = _merge(ordered_map(_mono_rect_chunk, chunks, jobs), limit)
    ox, oy = w.origin
    witnesses = []
    for y, x, rw, rh in matches:
        x0, y0 = ox + x, oy + y
        verts = [(x0, y0), (x0 + rw, y0), (x0 + rw, y0 + rh), (x0, y0 + rh)]
        witnesses.append(Configuration.build(Kind.MONO_RECT, verts, w))
    return SearchReport(f"mono-rect area={area}", witnesses, total, True, _ms_since(t0))


def rect_color_histogram(w: Window, area: int) -> dict[int, int]:
    """How many axis-parallel rectangles of ``area`` carry 1, 2, 3 or 4 colors."""
    if area < 1:
        raise InvalidParameters(f"area must be >= 1, got {area}")
    hist = {1: 0, 2: 0, 3: 0, 4: 0}
    for rw, rh in _divisor_pairs(area):
        if rw >= w.width or rh >= w.height:
            continue
        corners = np.sort(np.stack(_rect_corners(w.cells, rw, rh)), axis=0)
        distinct = 1 + (np.diff(corners, axis=0) != 0).sum(axis=0)
        for k, v in zip(*np.unique(distinct, return_counts=True)):
            hist[int(k)] += int(v)
    return hist


# -- rainbow triangles ---------------------------------------------------------

def _required_distinct(mode: RainbowMode, palette: int, size: int) -> int:
    return size if mode is RainbowMode.STRICT else min(palette, size)


def _triangle_chunk(args):
    w, target, required, lo, hi, limit = args
    ys, xs = np.divmod(np.arange(w.width * w.height), w.width)
    cs = w.cells.ravel()
    count = 0
    found = []
    for i in range(lo, hi):
        js = np.arange(i + 1, len(cs))
        ci = cs[i]
        if required == 3:
            js = js[cs[js] != ci]
        if len(js) < 2:
            continue
        dx, dy, cj = xs[js] - xs[i], ys[js] - ys[i], cs[js]
        cross = dx[:, None] * dy[None, :] - dy[:, None] * dx[None, :]
        mask = (np.abs(cross) == target) & (js[:, None] < js[None, :])
        if required == 3:
            mask &= cj[:, None] != cj[None, :]
        else:
            distinct = (1 + (cj != ci)[:, None]
                        + ((cj[None, :] != ci) & (cj[None, :] != cj[:, None])))
            mask &= distinct == required
        n = int(mask.sum())
        if not n:
            continue
        count += n
        if limit is None or len(found) < limit:
            a, b = np.nonzero(mask)
            found.extend((i, int(js[p]), int(js[q])) for p, q in zip(a, b))
    if limit is not None:
        found = found[:limit]
    return count, found


def _validity_table(palette: int, required: int) -> np.ndarray:
    a, b, c = np.indices((palette, palette, palette))
    distinct = 1 + (b != a) + ((c != a) & (c != b))
    return distinct == required


def _hbase_chunk(args):
    w, target, required, lo, hi, limit = args
    cells, width, height = w.cells, w.width, w.height
    valid = _validity_table(w.palette, required).astype(np.int64)
    hist = np.stack([np.bincount(row, minlength=w.palette) for row in cells])
    count = 0
    found = []
    for yl in range(lo, hi):
        local = []
        collect = limit is None or len(found) < limit
        for b, h in _divisor_pairs(target):
            if b >= width or yl + h >= height:
                continue
            for base_row, apex_row in ((yl, yl + h), (yl + h, yl)):
                c1, c2 = cells[base_row, :-b], cells[base_row, b:]
                per_pair = valid[c1, c2, :] @ hist[apex_row]
                count += int(per_pair.sum())
                if not collect:
                    continue
                for x in np.nonzero(per_pair)[0].tolist():
                    ok = valid[c1[x], c2[x], cells[apex_row]]
                    base = (base_row * width + x, base_row * width + x + b)
                    for xa in np.nonzero(ok)[0].tolist():
                        local.append(tuple(sorted(base + (apex_row * width + xa,))))
        local.sort()
        found.extend(local)
        if limit is not None:
            found = found[:limit]
    return count, found


def find_rainbow_triangles(w: Window, target: int, mode: RainbowMode = RainbowMode.STRICT,
                           limit: int | None = 10, sweep: str = "auto",
                           jobs: int = 1) -> SearchReport:
    """Rainbow triangles of doubled area ``target``.

    ``sweep="full"`` checks every point triple; ``"fast"`` only checks
    triangles with a horizontal side; ``"auto"`` picks full for windows of at
    most FULL_TRIANGLE_SWEEP_MAX_POINTS points. Witnesses are ordered by
    their sorted row-major vertex indices in both sweeps. The fast path
    counts its own family exactly but reports ``exhaustive=False``.
    """
    if target < 1:
        raise InvalidParameters(f"target doubled area must be >= 1, got {target}")
    if sweep not in ("auto", "full", "fast"):
        raise InvalidParameters(f"unknown sweep {sweep!r}")
    _check_limit(limit)
    t0 = time.perf_counter()
    n = w.width * w.height
    if sweep == "auto":
        sweep = "full" if n <= FULL_TRIANGLE_SWEEP_MAX_POINTS else "fast"
    required = _required_distinct(mode, w.palette, 3)
    pieces = max(1, jobs) * 4
    if sweep == "full":
        chunks = [(w, target, required, lo, hi, limit) for lo, hi in chunk_range(0, n, pieces)]
        total, matches = _merge(ordered_map(_triangle_chunk, chunks, jobs), limit)
    else:
        chunks = [(w, target, required, lo, hi, limit)
                  for lo, hi in chunk_range(0, w.height, pieces)]
        total, matches = _merge(ordered_map(_hbase_chunk, chunks, jobs), limit)
    ox, oy = w.origin
    witnesses = []
    for triple in matches:
        pts = [(ox + k % w.width, oy + k // w.width) for k in triple]
        witnesses.append(Configuration.build(Kind.RAINBOW_TRIANGLE, ccw_order(pts), w))
    query = f"rainbow-triangle doubled_area={target} mode={mode.value} sweep={sweep}"
    return SearchReport(query, witnesses, total, sweep == "full", _ms_since(t0))


# -- rainbow 3-term arithmetic progressions -----------------------------------

def rainbow_ap3_in(colors: Sequence[int]) -> list[Ap3Triple]:
    """Every rainbow 3-AP in a color sequence, ordered by (offset, difference)."""
    c = np.asarray(colors, dtype=np.int64)
    n = len(c)
    found = []
    for d in range(1, (n - 1) // 2 + 1):
        a, b, e = c[: n - 2 * d], c[d: n - d], c[2 * d:]
        for x in np.nonzero((a != b) & (a != e) & (b != e))[0].tolist():
            found.append(Ap3Triple(x, d, (int(a[x]), int(b[x]), int(e[x]))))
    found.sort()
    return found


def has_rainbow_ap3(colors: Sequence[int]) -> bool:
    n = len(colors)
    for d in range(1, (n - 1) // 2 + 1):
        for x in range(n - 2 * d):
            a, b, e = colors[x], colors[x + d], colors[x + 2 * d]
            if a != b and a != e and b != e:
                return True
    return False


def find_rainbow_ap3(w: Window, row: int, span: tuple[int, int] | None = None) -> list[Ap3Triple]:
    """Rainbow 3-APs on line ``row`` inside ``span = [a, b)`` (global x coordinates).

    Offsets in the returned triples are relative to ``a``.
    """
    if span is None:
        span = (w.origin.x, w.origin.x + w.width)
    a, b = span
    if b - a < 3:
        raise InvalidParameters(f"span {span} shorter than 3")
    if not (w.contains((a, row)) and w.contains((b - 1, row))):
        raise OutOfBounds(f"span {span} on row {row} not inside the window")
    line = w.row(row)
    return rainbow_ap3_in(line[a - w.origin.x: b - w.origin.x])


def search_rainbow_ap3(w: Window, rows: Iterable[int] | None = None,
                       span: tuple[int, int] | None = None,
                       limit: int | None = 10) -> SearchReport:
    """Rainbow 3-APs as configurations, over several rows of a window."""
    _check_limit(limit)
    t0 = time.perf_counter()
    if span is None:
        span = (w.origin.x, w.origin.x + w.width)
    rows = list(w.y_range if rows is None else rows)
    total = 0
    witnesses = []
    for y in rows:
        triples = find_rainbow_ap3(w, y, span)
        total += len(triples)
        for tr in triples:
            if limit is not None and len(witnesses) >= limit:
                break
            witnesses.append(Configuration.build(Kind.RAINBOW_AP3, tr.points(span[0], y), w))
    return SearchReport(f"rainbow-ap3 span={list(span)}", witnesses, total, True, _ms_since(t0))


# -- quadrilaterals with two horizontal sides ----------------------------------

def _quad_distinct(b1, b2, t1, t2):
    """Distinct-color counts for every (bottom pair, top pair) combination."""
    B1, B2 = b1[:, None], b2[:, None]
    T1, T2 = t1[None, :], t2[None, :]
    return (1 + (B2 != B1) + ((T1 != B1) & (T1 != B2))
            + ((T2 != B1) & (T2 != B2) & (T2 != T1)))


def _hquad_chunk(args):
    w, target, kind, required, lo, hi, limit = args
    cells, width, height = w.cells, w.width, w.height
    count = 0
    found = []
    for y1 in range(lo, hi):
        local = []
        collect = limit is None or len(found) < limit
        for h in range(1, height - y1):
            if kind is Kind.MONO_PARALLELOGRAM_H:
                if target % (2 * h):
                    continue
                shapes = [(target // (2 * h),) * 2]
            else:
                if target % h:
                    continue
                s = target // h
                shapes = [(p, s - p) for p in range(1, s) if 2 * p != s]
            y2 = y1 + h
            for p, q in shapes:
                if p >= width or q >= width:
                    continue
                b1, b2 = cells[y1, :-p], cells[y1, p:]
                t1, t2 = cells[y2, :-q], cells[y2, q:]
                if kind is Kind.MONO_PARALLELOGRAM_H:
                    mask = ((b1 == b2)[:, None] & (t1 == t2)[None, :]
                            & (b1[:, None] == t1[None, :]))
                else:
                    distinct = _quad_distinct(b1, b2, t1, t2)
                    mask = distinct >= 3 if required is None else distinct == required
                n = int(mask.sum())
                count += n
                if n and collect:
                    xa, xb = np.nonzero(mask)
                    local.extend((y1, a, h, p, q, b) for a, b in zip(xa.tolist(), xb.tolist()))
        local.sort()
        found.extend(local)
        if limit is not None:
            found = found[:limit]
    return count, found


def find_h_quads(w: Window, target: int, kind: Kind, mode: RainbowMode | None = None,
                 limit: int | None = 10, jobs: int = 1) -> SearchReport:
    """Quadrilaterals with two horizontal sides on distinct lines.

    ``kind`` selects monochromatic parallelograms (equal horizontal sides) or
    rainbow trapezoids (unequal horizontal sides). For trapezoids ``mode=None``
    asks for at least 3 distinct colors among the 4 vertices, CANONICAL for
    ``min(palette, 4)`` and STRICT for 4. Ordered by (lower line, lower-left
    x, height, lower side length, upper side length, upper-left x).
    """
    if kind is Kind.MONO_PARALLELOGRAM_H:
        if target < 2 or target % 2:
            raise InvalidParameters(
                f"parallelogram doubled area must be even and >= 2, got {target}")
        required = None
    elif kind is Kind.RAINBOW_TRAPEZOID_H:
        if target < 1:
            raise InvalidParameters(f"target doubled area must be >= 1, got {target}")
        required = None if mode is None else _required_distinct(mode, w.palette, 4)
    else:
        raise InvalidParameters(f"find_h_quads does not search {kind.value}")
    _check_limit(limit)
    t0 = time.perf_counter()
    chunks = [(w, target, kind, required, lo, hi, limit)
              for lo, hi in chunk_range(0, w.height, max(1, jobs) * 4)]
    total, matches = _merge(ordered_map(_hquad_chunk, chunks, jobs), limit)
    ox, oy = w.origin
    witnesses = []
    for y1, xa, h, p, q, xb in matches:
        ya, yb = oy + y1, oy + y1 + h
        verts = [(ox + xa, ya), (ox + xa + p, ya), (ox + xb + q, yb), (ox + xb, yb)]
        witnesses.append(Configuration.build(kind, verts, w))
    mode_name = "at-least-3" if mode is None else mode.value
    query = f"{kind.value} doubled_area={target}"
    if kind is Kind.RAINBOW_TRAPEZOID_H:
        query += f" mode={mode_name}"
    return SearchReport(query, witnesses, total, True, _ms_since(t0))


# -- re-validation ---------------------------------------------------------------

def _is_h_quad(v) -> bool:
    return (len(v) == 4 and v[0].y == v[1].y and v[2].y == v[3].y and v[0].y < v[2].y
            and v[0].x < v[1].x and v[3].x < v[2].x)


def revalidate(config: Configuration, source, mode: RainbowMode | None = None) -> bool:
    """Re-derive a configuration's area, shape and color predicate from scratch.

    ``source`` is a Window or a ColoringRule. ``mode`` overrides the default
    rainbow test of the kind (STRICT for triangles, at least 3 distinct
    colors for trapezoids, CANONICAL for rainbow parallelograms).
    """
    v = config.vertices
    try:
        colors = tuple(source.color(p) for p in v)
    except OutOfBounds:
        return False
    if colors != tuple(config.colors):
        return False
    distinct = len(set(colors))
    kind = config.kind
    if kind is Kind.RAINBOW_AP3:
        return (len(v) == 3 and config.doubled_area == 0 and v[0].y == v[1].y == v[2].y
                and v[1].x - v[0].x == v[2].x - v[1].x > 0 and distinct == 3)
    area = doubled_area(v)
    if area != config.doubled_area or area <= 0:
        return False
    if kind is Kind.MONO_RECT:
        xs, ys = {p.x for p in v}, {p.y for p in v}
        corners = {(x, y) for x in xs for y in ys}
        return (len(xs) == 2 and len(ys) == 2 and set(v) == corners
                and list(v) == ccw_order(v) and distinct == 1)
    if kind is Kind.RAINBOW_TRIANGLE:
        return len(v) == 3 and colors_are_rainbow(colors, source.palette, mode or RainbowMode.STRICT)
    if not _is_h_quad(v):
        return False
    bottom, top = v[1].x - v[0].x, v[2].x - v[3].x
    if kind is Kind.MONO_PARALLELOGRAM_H:
        return bottom == top and distinct == 1
    if kind is Kind.RAINBOW_PARALLELOGRAM_H:
        return bottom == top and colors_are_rainbow(colors, source.palette,
                                                    mode or RainbowMode.CANONICAL)
    if kind is Kind.RAINBOW_TRAPEZOID_H:
        if bottom == top:
            return False
        if mode is None:
            return distinct >= 3
        return colors_are_rainbow(colors, source.palette, mode)
    return False

"""Constructive searches for rainbow triangles and quadrilaterals between lines.

Each search follows one fixed construction: a differing adjacent pair or a
rainbow 3-AP on line y = 0, then a line above it chosen so the resulting
figure has the requested area. When the construction cannot be completed in
the window, ``PropResult.reason`` says which step failed.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..core import Window, ccw_order
from ..errors import InvalidParameters
from ..search import Configuration, Kind, find_rainbow_ap3

# failure reasons, from earliest to latest construction step
NO_ADJACENT_PAIR = "row0-monochromatic"
NO_AP3 = "no-ap3"
DIVISIBILITY = "divisibility"
ROW_OUTSIDE = "row-outside-window"
NO_COLOR = "no-suitable-color"
_STAGES = (NO_ADJACENT_PAIR, NO_AP3, DIVISIBILITY, ROW_OUTSIDE, NO_COLOR)


@dataclass(frozen=True)
class PropResult:
    witnesses: tuple[Configuration, ...] = ()
    reason: str | None = None

    @property
    def found(self) -> bool:
        return bool(self.witnesses)

    def to_dict(self) -> dict:
        return {"witnesses": [c.to_dict() for c in self.witnesses], "reason": self.reason}

    @classmethod
    def from_dict(cls, data: dict) -> "PropResult":
        return cls(tuple(Configuration.from_dict(c) for c in data["witnesses"]), data["reason"])


def _latest(reasons):
    return max(reasons, key=_STAGES.index)


def _require_row(w: Window, y: int):
    if y not in w.y_range:
        raise InvalidParameters(f"line y={y} is not inside the window")


def _require_palette(w: Window, r: int):
    if w.palette < r:
        raise InvalidParameters(f"needs a palette of at least {r} colors, got {w.palette}")


def prop_triangle_between_lines(w: Window) -> PropResult:
    """Rainbow triangle of doubled area 2: adjacent pair on y=0, apex on y=2."""
    _require_row(w, 0)
    _require_row(w, 2)
    _require_palette(w, 3)
    low, high = w.row(0), w.row(2)
    ox = w.origin.x
    saw_pair = False
    for x in range(w.width - 1):
        a, b = int(low[x]), int(low[x + 1])
        if a == b:
            continue
        saw_pair = True
        for xa in range(w.width):
            if int(high[xa]) not in (a, b):
                verts = ccw_order([(ox + x, 0), (ox + x + 1, 0), (ox + xa, 2)])
                return PropResult((Configuration.build(Kind.RAINBOW_TRIANGLE, verts, w),))
    return PropResult(reason=NO_COLOR if saw_pair else NO_ADJACENT_PAIR)


def _first_avoiding(line, avoid) -> int | None:
    for x, c in enumerate(line.tolist()):
        if c not in avoid:
            return x
    return None


def prop_double_triangles(w: Window, a: int) -> PropResult:
    """Two rainbow triangles ABD, BCE of doubled area 2a.

    A, B, C is a rainbow 3-AP with gap s on y=0; D and E lie on y = 2a/s.
    """
    if a <= 0:
        raise InvalidParameters(f"area parameter must be positive, got {a}")
    _require_row(w, 0)
    _require_palette(w, 3)
    ox = w.origin.x
    reasons = [NO_AP3]
    for tr in find_rainbow_ap3(w, 0):
        s = tr.d
        if (2 * a) % s:
            reasons.append(DIVISIBILITY)
            continue
        t = 2 * a // s
        if t not in w.y_range:
            reasons.append(ROW_OUTSIDE)
            continue
        line = w.row(t)
        ca, cb, cc = tr.sigma
        xd = _first_avoiding(line, (ca, cb))
        xe = _first_avoiding(line, (cb, cc))
        if xd is None or xe is None:
            reasons.append(NO_COLOR)
            continue
        pa, pb, pc = tr.points(ox, 0)
        d, e = (ox + xd, t), (ox + xe, t)
        abd = Configuration.build(Kind.RAINBOW_TRIANGLE, ccw_order([pa, pb, d]), w)
        bce = Configuration.build(Kind.RAINBOW_TRIANGLE, ccw_order([pb, pc, e]), w)
        return PropResult((abd, bce))
    return PropResult(reason=_latest(reasons))


def prop_para_or_trapezium(w: Window, a: int) -> PropResult:
    """Rainbow parallelogram of doubled area 2a or rainbow trapezium of doubled area 3a.

    A, B, C is a rainbow 3-AP with gap d on y=0; E, F = (x, t), (x + d, t)
    with t = a/d carry different colors, at least one outside the AP's.
    """
    if a <= 0:
        raise InvalidParameters(f"area parameter must be positive, got {a}")
    _require_row(w, 0)
    _require_palette(w, 4)
    ox = w.origin.x
    reasons = [NO_AP3]
    for tr in find_rainbow_ap3(w, 0):
        d = tr.d
        if a % d:
            reasons.append(DIVISIBILITY)
            continue
        t = a // d
        if t not in w.y_range:
            reasons.append(ROW_OUTSIDE)
            continue
        line = w.row(t).tolist()
        pa, pb, pc = tr.points(ox, 0)
        c1, c2, c3 = tr.sigma
        for x in range(len(line) - d):
            ce, cf = line[x], line[x + d]
            if ce == cf or (ce in tr.sigma and cf in tr.sigma):
                continue
            other = cf if ce not in tr.sigma else ce
            e, f = (ox + x, t), (ox + x + d, t)
            if other == c2:
                kind, verts = Kind.RAINBOW_TRAPEZOID_H, [pa, pc, f, e]
            elif other == c1:
                kind, verts = Kind.RAINBOW_PARALLELOGRAM_H, [pb, pc, f, e]
            else:
                kind, verts = Kind.RAINBOW_PARALLELOGRAM_H, [pa, pb, f, e]
            return PropResult((Configuration.build(kind, verts, w),))
        reasons.append(NO_COLOR)
    return PropResult(reason=_latest(reasons))

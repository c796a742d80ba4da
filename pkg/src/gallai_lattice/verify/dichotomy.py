"""Rainbow triangle of doubled area 1, or monochromatic rectangles of given even areas."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..core import RainbowMode, Window
from ..errors import InvalidParameters
from ..search import Configuration, find_mono_rects, find_rainbow_triangles

CAVEAT = ("window-scoped verdict: satisfied=false in a finite window does not "
          "contradict a statement about the whole lattice")


@dataclass(frozen=True)
class DichotomyReport:
    found_rainbow_triangle: Configuration | None
    mono_rect_areas_found: dict[int, Configuration | None]
    satisfied: bool
    triangle_search_exhaustive: bool
    window_scoped: bool = True
    caveat: str = field(default=CAVEAT)

    def to_dict(self) -> dict:
        tri = self.found_rainbow_triangle
        return {
            "found_rainbow_triangle": None if tri is None else tri.to_dict(),
            "mono_rect_areas_found": {str(a): (None if c is None else c.to_dict())
                                      for a, c in sorted(self.mono_rect_areas_found.items())},
            "satisfied": self.satisfied,
            "triangle_search_exhaustive": self.triangle_search_exhaustive,
            "window_scoped": self.window_scoped,
            "caveat": self.caveat,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "DichotomyReport":
        tri = data["found_rainbow_triangle"]
        rects = {int(a): (None if c is None else Configuration.from_dict(c))
                 for a, c in data["mono_rect_areas_found"].items()}
        return cls(None if tri is None else Configuration.from_dict(tri), rects,
                   bool(data["satisfied"]), bool(data["triangle_search_exhaustive"]),
                   bool(data["window_scoped"]), str(data["caveat"]))


def verify_dichotomy(w: Window, even_areas, jobs: int = 1,
                     sweep: str = "auto") -> DichotomyReport:
    """Look for a rainbow triangle of doubled area 1 and for each requested mono rectangle.

    ``satisfied`` holds when the triangle was found or every requested area
    has a monochromatic axis-parallel rectangle inside the window.
    """
    areas = sorted(set(int(a) for a in even_areas))
    if not areas:
        raise InvalidParameters("even_areas must not be empty")
    if any(a <= 0 or a % 2 for a in areas):
        raise InvalidParameters(f"all areas must be even and positive, got {areas}")
    if w.palette < 3:
        raise InvalidParameters(f"the dichotomy concerns r >= 3 colors, got {w.palette}")
    tri = find_rainbow_triangles(w, 1, RainbowMode.STRICT, limit=1, sweep=sweep, jobs=jobs)
    rects = {}
    for a in areas:
        rep = find_mono_rects(w, a, limit=1, jobs=jobs)
        rects[a] = rep.witnesses[0] if rep.witnesses else None
    triangle = tri.witnesses[0] if tri.witnesses else None
    satisfied = triangle is not None or all(c is not None for c in rects.values())
    return DichotomyReport(triangle, rects, satisfied, tri.exhaustive)

"""Monochromatic parallelogram or rainbow trapezoid from repeated rainbow 3-APs.

Cut each line into aligned length-N segments and label every segment with
the lexicographically smallest rainbow 3-AP it contains (``build_chi0``).
If one label occurs on two segments i < j of line u and on a segment k of
another line u', let alpha, beta, gamma be the three progressions and put
z = gamma_2 + (beta_2 - alpha_2). Then either {alpha_2, beta_2, gamma_2, z}
is monochromatic, or {alpha_1, beta_2, gamma_3, z} carries three colors;
both quadrilaterals have doubled area 2 (j - i) N |u' - u|.
"""

from __future__ import annotations

from dataclasses import dataclass

from ..colorings import ColoringRule, render
from ..core import Point, Window, ccw_order
from ..errors import InvalidParameters
from ..parallel import chunk_range, ordered_map
from ..search import Ap3Triple, Configuration, Kind, rainbow_ap3_in, revalidate

Chi0 = dict  # (segment i, row j) -> Ap3Triple | None


def _chi0_rows(args):
    w, n, y_lo, y_hi = args
    out = {}
    first_seg = w.origin.x // n
    for row in range(y_lo, y_hi):
        line = w.cells[row]
        for s in range(w.width // n):
            triples = rainbow_ap3_in(line[s * n:(s + 1) * n])
            out[(first_seg + s, w.origin.y + row)] = triples[0] if triples else None
    return out


def build_chi0(w: Window, n: int, jobs: int = 1) -> Chi0:
    """Smallest rainbow-AP3 label of every aligned segment L_ij inside ``w``.

    Keys are (segment index i, line y); segment i covers x in [iN, (i+1)N).
    """
    if n < 3:
        raise InvalidParameters(f"segment length must be >= 3, got {n}")
    if w.width % n or w.origin.x % n:
        raise InvalidParameters(
            f"window x-extent [{w.origin.x}, {w.origin.x + w.width}) is not a union "
            f"of aligned length-{n} segments")
    chi0: Chi0 = {}
    chunks = [(w, n, lo, hi) for lo, hi in chunk_range(0, w.height, max(1, jobs) * 2)]
    for part in ordered_map(_chi0_rows, chunks, jobs):
        chi0.update(part)
    return chi0


def build_chi1(chi0: Chi0, row: int) -> set[Ap3Triple]:
    """The labels occurring on line ``row`` (segments without a label are skipped)."""
    entries = [t for (i, j), t in chi0.items() if j == row]
    if not entries:
        raise InvalidParameters(f"row {row} not covered by the label grid")
    return {t for t in entries if t is not None}


@dataclass(frozen=True)
class CanonicalWitness:
    n: int
    row_u: int
    row_u2: int
    segments: tuple[int, int, int]
    triple: Ap3Triple
    alpha: tuple[Point, Point, Point]
    beta: tuple[Point, Point, Point]
    gamma: tuple[Point, Point, Point]
    z: Point
    outcome: Configuration
    doubled_area: int

    def to_dict(self) -> dict:
        pts = lambda ps: [[p.x, p.y] for p in ps]  # noqa: E731
        return {
            "n": self.n,
            "row_u": self.row_u,
            "row_u2": self.row_u2,
            "segments": list(self.segments),
            "triple": self.triple.to_dict(),
            "alpha": pts(self.alpha),
            "beta": pts(self.beta),
            "gamma": pts(self.gamma),
            "z": [self.z.x, self.z.y],
            "outcome": self.outcome.to_dict(),
            "doubled_area": self.doubled_area,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "CanonicalWitness":
        pts = lambda ps: tuple(Point(int(x), int(y)) for x, y in ps)  # noqa: E731
        return cls(int(data["n"]), int(data["row_u"]), int(data["row_u2"]),
                   tuple(int(s) for s in data["segments"]), Ap3Triple.from_dict(data["triple"]),
                   pts(data["alpha"]), pts(data["beta"]), pts(data["gamma"]),
                   Point(*data["z"]), Configuration.from_dict(data["outcome"]),
                   int(data["doubled_area"]))


def _pick_segments(chi0: Chi0):
    """Lexicographically smallest (u, i, j, u', k) with equal labels, or None."""
    by_row: dict[int, dict[Ap3Triple, list[int]]] = {}
    for (i, j), t in sorted(chi0.items(), key=lambda kv: (kv[0][1], kv[0][0])):
        if t is not None:
            by_row.setdefault(j, {}).setdefault(t, []).append(i)
    rows = sorted(by_row)
    for u in rows:
        best = None
        for t, segs in by_row[u].items():
            if len(segs) < 2:
                continue
            other = next((v for v in rows if v != u and t in by_row[v]), None)
            if other is None:
                continue
            cand = (segs[0], segs[1], other, by_row[other][t][0], t)
            if best is None or cand[:4] < best[:4]:
                best = cand
        if best is not None:
            i, j, u2, k, t = best
            return u, i, j, u2, k, t
    return None


def witness_from_segments(rule, n: int, u: int, i: int, j: int, u2: int, k: int,
                          triple: Ap3Triple) -> CanonicalWitness:
    """Build the parallelogram-or-trapezoid outcome for three equally labelled segments."""
    alpha = triple.points(i * n, u)
    beta = triple.points(j * n, u)
    gamma = triple.points(k * n, u2)
    z = gamma[1] + (beta[1] - alpha[1])
    if rule.color(z) == triple.sigma[1]:
        kind, verts = Kind.MONO_PARALLELOGRAM_H, (alpha[1], beta[1], gamma[1], z)
    else:
        kind, verts = Kind.RAINBOW_TRAPEZOID_H, (alpha[0], beta[1], gamma[2], z)
    outcome = Configuration.build(kind, ccw_order(verts), rule)
    return CanonicalWitness(n, u, u2, (i, j, k), triple, alpha, beta, gamma, z,
                            outcome, outcome.doubled_area)


def canonical_witness_search(rule: ColoringRule, n: int, x_segments: int, y_rows: int,
                             jobs: int = 1) -> CanonicalWitness | None:
    """Scan ``x_segments`` segments on each of ``y_rows`` lines for a witness.

    The window searched starts at the origin. Returns None when no label
    repeats as required within the budgets.
    """
    if n < 6 or n % 3:
        raise InvalidParameters(f"N must be >= 6 and divisible by 3, got {n}")
    if x_segments < 2 or y_rows < 2:
        raise InvalidParameters("segment and row budgets must be >= 2")
    w = render(rule, (0, 0), x_segments * n, y_rows)
    picked = _pick_segments(build_chi0(w, n, jobs))
    if picked is None:
        return None
    return witness_from_segments(rule, n, *picked)


def check_witness(wit: CanonicalWitness, rule) -> list[str]:
    """Independent re-check of a witness against the coloring; returns problems found."""
    problems = []
    n, (i, j, k) = wit.n, wit.segments
    for (seg, row), pts in (((i, wit.row_u), wit.alpha), ((j, wit.row_u), wit.beta),
                            ((k, wit.row_u2), wit.gamma)):
        line = [rule.color((x, row)) for x in range(seg * n, (seg + 1) * n)]
        labels = rainbow_ap3_in(line)
        if not labels or labels[0] != wit.triple:
            problems.append(f"segment ({seg}, {row}) is not labelled {wit.triple}")
        if tuple(pts) != wit.triple.points(seg * n, row):
            problems.append(f"points of segment ({seg}, {row}) do not match the label")
    if wit.row_u == wit.row_u2 or not i < j:
        problems.append("segments not arranged as i < j on u and k on u' != u")
    if wit.z != wit.gamma[1] + (wit.beta[1] - wit.alpha[1]):
        problems.append("z is not gamma_2 + (beta_2 - alpha_2)")
    expected = 2 * (j - i) * n * abs(wit.row_u2 - wit.row_u)
    if wit.doubled_area != expected or wit.outcome.doubled_area != expected:
        problems.append(f"doubled area {wit.doubled_area} != {expected}")
    if not revalidate(wit.outcome, rule):
        problems.append("outcome fails re-validation")
    mono = rule.color(wit.z) == wit.triple.sigma[1]
    want = Kind.MONO_PARALLELOGRAM_H if mono else Kind.RAINBOW_TRAPEZOID_H
    if wit.outcome.kind is not want:
        problems.append(f"outcome kind {wit.outcome.kind.value}, expected {want.value}")
    return problems

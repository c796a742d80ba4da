"""Naive reference implementations used only by the tests.

Everything here works on plain nested lists (rows bottom-first, indexed
grid[y][x]) and deliberately shares no code with the package.
"""

import itertools


def shoelace2(pts):
    s = 0
    for (x0, y0), (x1, y1) in zip(pts, pts[1:] + pts[:1]):
        s += x0 * y1 - x1 * y0
    return abs(s)


def mono_rect_count(grid, area):
    """Quadruple loop over corner pairs."""
    h, w = len(grid), len(grid[0])
    count = 0
    for y0 in range(h):
        for y1 in range(y0 + 1, h):
            for x0 in range(w):
                for x1 in range(x0 + 1, w):
                    if (x1 - x0) * (y1 - y0) != area:
                        continue
                    c = grid[y0][x0]
                    if grid[y0][x1] == c and grid[y1][x0] == c and grid[y1][x1] == c:
                        count += 1
    return count


def rect_histogram(grid, area):
    h, w = len(grid), len(grid[0])
    hist = {1: 0, 2: 0, 3: 0, 4: 0}
    for y0 in range(h):
        for y1 in range(y0 + 1, h):
            for x0 in range(w):
                for x1 in range(x0 + 1, w):
                    if (x1 - x0) * (y1 - y0) == area:
                        cs = {grid[y0][x0], grid[y0][x1], grid[y1][x0], grid[y1][x1]}
                        hist[len(cs)] += 1
    return hist


def ap3_count(row):
    """All (x, d) pairs whose three points carry three colors."""
    n = len(row)
    return sum(1 for x in range(n) for d in range(1, n)
               if x + 2 * d < n and len({row[x], row[x + d], row[x + 2 * d]}) == 3)


def ap3_list(row):
    n = len(row)
    return sorted((x, d, (row[x], row[x + d], row[x + 2 * d]))
                  for x in range(n) for d in range(1, n)
                  if x + 2 * d < n and len({row[x], row[x + d], row[x + 2 * d]}) == 3)


def rainbow_triangles(grid, target, required_distinct):
    """Every point triple of the grid, as sorted (x, y) triples."""
    h, w = len(grid), len(grid[0])
    pts = [(x, y) for y in range(h) for x in range(w)]
    out = set()
    for a, b, c in itertools.combinations(pts, 3):
        if shoelace2([a, b, c]) != target:
            continue
        if len({grid[p[1]][p[0]] for p in (a, b, c)}) == required_distinct:
            out.add(tuple(sorted([a, b, c])))
    return out


def h_quads(grid, target, parallelogram, min_distinct=3):
    """Quadrilaterals with horizontal sides on two lines, by looping over all four x's."""
    h, w = len(grid), len(grid[0])
    out = set()
    for y1 in range(h):
        for y2 in range(y1 + 1, h):
            for xa in range(w):
                for xb in range(xa + 1, w):
                    for xc in range(w):
                        for xd in range(xc + 1, w):
                            p, q = xb - xa, xd - xc
                            if (p == q) != parallelogram:
                                continue
                            quad = [(xa, y1), (xb, y1), (xd, y2), (xc, y2)]
                            if shoelace2(quad) != target:
                                continue
                            cs = {grid[y][x] for x, y in quad}
                            ok = len(cs) == 1 if parallelogram else len(cs) >= min_distinct
                            if ok:
                                out.add(tuple(quad))
    return out


def min_class_threshold(n):
    """Smallest m forcing a rainbow 3-AP, by running through all 3**n colorings."""
    best = -1
    for col in itertools.product(range(3), repeat=n):
        if ap3_count(col) == 0:
            best = max(best, min(col.count(0), col.count(1), col.count(2)))
    return best + 1


def has_mono_kap(col, k):
    n = len(col)
    for d in range(1, n):
        for x in range(n - (k - 1) * d):
            if len({col[x + i * d] for i in range(k)}) == 1:
                return True
    return False


def every_coloring_has_mono_kap(n, k, r):
    return all(has_mono_kap(col, k) for col in itertools.product(range(r), repeat=n))

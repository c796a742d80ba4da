"""Small van der Waerden numbers by backtracking."""

from __future__ import annotations

from ..errors import InvalidParameters


def _closes_mono_ap(col: list[int], p: int, k: int) -> bool:
    c = col[p]
    for d in range(1, p // (k - 1) + 1):
        if all(col[p - i * d] == c for i in range(1, k)):
            return True
    return False


def longest_ap_free_coloring(k: int, r: int, cap: int) -> list[int]:
    """A longest r-coloring of [m], m <= cap, with no monochromatic k-AP.

    The search stops as soon as it reaches length ``cap``. Colors are
    labelled in order of first appearance, which loses no generality.
    """
    col = [0] * cap
    best: list[int] = []

    def rec(p, used):
        nonlocal best
        if p > len(best):
            best = col[:p]
        if p == cap:
            return True
        for c in range(min(used + 1, r)):
            col[p] = c
            if not _closes_mono_ap(col, p, k) and rec(p + 1, max(used, c + 1)):
                return True
        return False

    rec(0, 0)
    return best


def vdw_number(k: int, r: int, cap: int) -> int | None:
    """Least n <= cap such that every r-coloring of [n] has a monochromatic k-AP.

    Returns None when a good coloring of [cap] exists, i.e. the number
    exceeds ``cap``.
    """
    if k < 3:
        raise InvalidParameters(f"AP length must be >= 3, got {k}")
    if r < 2:
        raise InvalidParameters(f"need at least 2 colors, got {r}")
    if cap < k:
        raise InvalidParameters(f"cap must be >= k, got cap={cap}, k={k}")
    longest = len(longest_ap_free_coloring(k, r, cap))
    return None if longest >= cap else longest + 1

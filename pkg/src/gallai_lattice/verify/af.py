"""Minimum color-class size forcing a rainbow 3-AP in a 3-coloring of [N].

``af_formula_threshold`` evaluates the published bound exactly as printed;
``af_brute_force`` finds the true threshold by exhaustive enumeration of
rainbow-AP3-free colorings. The two are compared, never reconciled.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from ..errors import BudgetExceeded, InvalidParameters
from ..parallel import ordered_map

DEFAULT_MAX_N = 16
# canonical prefixes of this length are the unit of parallel work
_PREFIX_LEN = 7


@dataclass(frozen=True)
class AfResult:
    n: int
    formula_threshold: int
    brute_threshold: int
    extremal_witness: tuple[int, ...]
    agree: bool

    def to_dict(self) -> dict:
        return {
            "n": self.n,
            "formula_threshold": self.formula_threshold,
            "brute_threshold": self.brute_threshold,
            "extremal_witness": list(self.extremal_witness),
            "agree": self.agree,
        }

    @classmethod
    def from_dict(cls, data: dict) -> "AfResult":
        return cls(int(data["n"]), int(data["formula_threshold"]), int(data["brute_threshold"]),
                   tuple(int(c) for c in data["extremal_witness"]), bool(data["agree"]))


def af_formula_threshold(n: int) -> int:
    """Smallest class size strictly above the printed bound.

    The bound is floor((n+2)/6) when n is not 0 mod 6 and (n+4)/6 otherwise.
    """
    if n < 6:
        raise InvalidParameters(f"the bound is stated for N >= 6, got {n}")
    if n % 6:
        return (n + 2) // 6 + 1
    # (n+4)/6 is never an integer here, so "strictly above" is its ceiling
    return (n + 4) // 6 + 1


def _completes_rainbow(col: Sequence[int], p: int) -> bool:
    """Does position ``p`` end a rainbow 3-AP within ``col[:p+1]``?"""
    c = col[p]
    for d in range(1, p // 2 + 1):
        a, b = col[p - 2 * d], col[p - d]
        if a != b and a != c and b != c:
            return True
    return False


def contains_rainbow_ap3(col: Sequence[int]) -> bool:
    """The predicate the enumeration prunes on, applied to a whole coloring."""
    return any(_completes_rainbow(col, p) for p in range(2, len(col)))


def _canonical_prefixes(n: int, length: int) -> list[tuple[int, ...]]:
    """Rainbow-free colorings of [length] labelled in order of first appearance."""
    out = []
    col = [0] * length

    def rec(p, used):
        if p == length:
            out.append(tuple(col))
            return
        for c in range(min(used + 1, 3)):
            col[p] = c
            if not _completes_rainbow(col, p):
                rec(p + 1, max(used, c + 1))

    rec(1, 1)
    return out


def _best_extension(args) -> tuple[int, tuple[int, ...]]:
    """Largest minimum class size over rainbow-free completions of a prefix.

    Ties resolve to the lexicographically smallest coloring. Returns
    (-1, ()) when the prefix has no completion.
    """
    n, prefix = args
    col = list(prefix) + [0] * (n - len(prefix))
    counts = [0, 0, 0]
    for c in prefix:
        counts[c] += 1
    best = [-1, ()]

    def rec(p, used):
        if p == n:
            m = min(counts)
            if m > best[0]:
                best[0], best[1] = m, tuple(col)
            return
        # prune: remaining positions cannot lift the minimum past the best
        if min(counts) + (n - p) <= best[0]:
            return
        for c in range(min(used + 1, 3)):
            col[p] = c
            if _completes_rainbow(col, p):
                continue
            counts[c] += 1
            rec(p + 1, max(used, c + 1))
            counts[c] -= 1

    rec(len(prefix), max(prefix) + 1)
    return best[0], best[1]


def af_brute_force(n: int, max_n: int = DEFAULT_MAX_N, jobs: int = 1) -> AfResult:
    """Exhaustively determine the class-size threshold for rainbow 3-APs in [n].

    Colorings are enumerated up to permutation of the three colors (position
    1 gets color 0 and new colors appear in increasing order); the minimum
    class size is permutation-invariant, so the maximum over representatives
    equals the maximum over all colorings.
    """
    if n < 6:
        raise InvalidParameters(f"N must be >= 6, got {n}")
    if n > max_n:
        raise BudgetExceeded(f"N={n} exceeds the enumeration budget max_n={max_n}")
    prefixes = _canonical_prefixes(n, min(n, _PREFIX_LEN))
    results = ordered_map(_best_extension, [(n, p) for p in prefixes], jobs)
    best_m = max(m for m, _ in results)
    witness = min(col for m, col in results if m == best_m)
    formula = af_formula_threshold(n)
    brute = best_m + 1
    return AfResult(n, formula, brute, witness, brute == formula)

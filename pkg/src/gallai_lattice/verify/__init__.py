"""Executable counterparts of the dichotomy, threshold and witness results."""

from .af import AfResult, af_brute_force, af_formula_threshold, contains_rainbow_ap3
from .canonical import (CanonicalWitness, build_chi0, build_chi1, canonical_witness_search,
                        check_witness)
from .dichotomy import DichotomyReport, verify_dichotomy
from .props import PropResult, prop_double_triangles, prop_para_or_trapezium, \
    prop_triangle_between_lines
from .vdw import vdw_number

__all__ = [
    "AfResult", "af_brute_force", "af_formula_threshold", "contains_rainbow_ap3",
    "CanonicalWitness", "build_chi0", "build_chi1", "canonical_witness_search", "check_witness",
    "DichotomyReport", "verify_dichotomy",
    "PropResult", "prop_double_triangles", "prop_para_or_trapezium", "prop_triangle_between_lines",
    "vdw_number",
]

"""Exact-arithmetic kernel: fields, graded rings, Groebner bases,
syzygies, resolutions, saturation, annihilators."""

from .field import GF, QQ, FieldSpec
from .ring import PolyRing
from .poly import PolyElem, parse_poly
from .module import GradedFreeModule, PolyMatrix, block_matrix
from .ctx import GradedModulePresentation, Ideal, RingCtx
from .groebner import GroebnerBasis, poly_to_vec, vec_to_poly
from .ops import (
    annihilator,
    columns_to_matrix,
    free_resolution,
    groebner,
    homology_presentation,
    ideal_intersect,
    ideal_saturate,
    ideal_sum,
    is_regular_sequence,
    is_zero_module,
    lift,
    minimal_generator_columns,
    prune_presentation,
    radical_contains,
    saturate,
    syzygies,
)
from . import degreewise

__all__ = [
    "GF",
    "QQ",
    "FieldSpec",
    "PolyRing",
    "PolyElem",
    "parse_poly",
    "GradedFreeModule",
    "PolyMatrix",
    "block_matrix",
    "GradedModulePresentation",
    "Ideal",
    "RingCtx",
    "GroebnerBasis",
    "poly_to_vec",
    "vec_to_poly",
    "annihilator",
    "columns_to_matrix",
    "free_resolution",
    "groebner",
    "homology_presentation",
    "ideal_intersect",
    "ideal_saturate",
    "ideal_sum",
    "is_regular_sequence",
    "is_zero_module",
    "lift",
    "minimal_generator_columns",
    "prune_presentation",
    "radical_contains",
    "saturate",
    "syzygies",
    "degreewise",
]

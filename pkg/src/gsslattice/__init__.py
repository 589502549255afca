"""Exact intersection forms and tiling polynomials of cyclic block words."""

from .dual_graph import Branch, DualGraph, branch_determinants, build_dual_graph, to_dot
from .form import (
    IntersectionForm,
    build_form,
    chain_det,
    cycle_det,
    det_exact,
    is_positive_definite,
)
from .invariants import (
    InvariantReport,
    atlas,
    discriminant,
    enumerate_words,
    lattice_index,
    twisting_coefficient,
    verify_main_theorem,
    verify_reduction,
)
from .sequence import (
    Part,
    R,
    S,
    SequenceError,
    SigmaWord,
    SurfaceClass,
    SurfaceTag,
    canonical_rotation,
    classify,
    concat,
    expand,
    factor_aword,
    parse_sigma,
    sigma_n,
    split_simple,
)
from .tiling import (
    MarkSet,
    TilePolynomial,
    canonical_tiling,
    compose,
    delta,
    eval_poly,
    generating_subsets,
    is_allowed,
    mark_set,
    poly,
    specialize_zero,
)

__version__ = "0.1.0"

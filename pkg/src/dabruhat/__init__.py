"""Exact arithmetic in the double affine Weyl semigroup of a simply-laced type.

Elements are X^zeta w~ with zeta an affine weight in the Tits cone and w~ in
the affine Weyl group.  The library computes lengths, lower graphs and their
corners, length-difference sets, cocovers, covers, Bruhat comparisons and
finite Bruhat intervals, all in plain integers.
"""
from __future__ import annotations

from .affine import (
    AffineRoot,
    AffineWeight,
    AffineWeylElement,
    EdgeKind,
    QbgEdge,
    aff_act_on_affine_root,
    aff_act_on_weight,
    aff_length,
    aff_length_product_identity_check,
    affine_from_word,
    affine_identity,
    affine_reflection,
    affine_simple_reflection,
    dominantize,
    in_tits_cone,
    inversions,
    pairing_2rho,
    qbg_edge,
    qbg_edges_into,
    qbg_neighborhood,
    translation,
)
from .bruhat import (
    Cocover,
    CocoverDescriptor,
    Cover,
    CoverDiffSet,
    Interval,
    LengthDiffSet,
    LowerGraph,
    classify_cocovers_qbg,
    cocovers,
    cocovers_fallback,
    cocovers_theorem2,
    corners,
    cover_diff_set,
    covers,
    gamma_contains,
    gamma_shape,
    interval,
    is_cocover,
    is_corner,
    is_leq,
    length_diff_set,
    required_bound,
    rotate180,
)
from .double import (
    DoubleAffineRoot,
    ExtendedElement,
    SemigroupElement,
    apply_reflection_left,
    daff_act_on_root,
    daff_is_positive,
    daff_length,
    daff_length_split,
    daff_reflect_root,
    daff_reflection,
    decompose,
    identity_element,
    length,
    make_element,
)
from .errors import (
    AffineLengthBoundError,
    CapExceededError,
    DabruhatError,
    DomainError,
    HypothesisError,
    InternalError,
    LevelZeroError,
    NotDownwardError,
    NotRegularError,
    NotUpwardError,
    OutsideTitsConeError,
    ParseError,
    SystemMismatchError,
    WeightBoundError,
)
from .notation import format_element, format_root, parse_element, parse_finite_root, parse_root
from .rootsystem import (
    FiniteRootSystem,
    FiniteWeylElement,
    build_root_system,
    finite_act,
    pairing_root_root,
    pairing_weight_root,
)

__all__ = [
    "AffineLengthBoundError",
    "AffineRoot",
    "AffineWeight",
    "AffineWeylElement",
    "CapExceededError",
    "Cocover",
    "CocoverDescriptor",
    "Cover",
    "CoverDiffSet",
    "DabruhatError",
    "DomainError",
    "DoubleAffineRoot",
    "EdgeKind",
    "ExtendedElement",
    "FiniteRootSystem",
    "FiniteWeylElement",
    "HypothesisError",
    "InternalError",
    "LevelZeroError",
    "Interval",
    "LengthDiffSet",
    "LowerGraph",
    "NotDownwardError",
    "NotRegularError",
    "NotUpwardError",
    "OutsideTitsConeError",
    "ParseError",
    "QbgEdge",
    "SemigroupElement",
    "SystemMismatchError",
    "WeightBoundError",
    "aff_act_on_affine_root",
    "aff_act_on_weight",
    "aff_length",
    "aff_length_product_identity_check",
    "affine",
    "affine_from_word",
    "affine_identity",
    "affine_reflection",
    "affine_simple_reflection",
    "apply_reflection_left",
    "bruhat",
    "build_root_system",
    "classify_cocovers_qbg",
    "cocovers",
    "cocovers_fallback",
    "cocovers_theorem2",
    "corners",
    "cover_diff_set",
    "covers",
    "daff_act_on_root",
    "daff_is_positive",
    "daff_length",
    "daff_length_split",
    "daff_reflect_root",
    "daff_reflection",
    "decompose",
    "dominantize",
    "double",
    "errors",
    "finite_act",
    "format_element",
    "format_root",
    "gamma_contains",
    "gamma_shape",
    "identity_element",
    "in_tits_cone",
    "interval",
    "inversions",
    "is_cocover",
    "is_corner",
    "is_leq",
    "length",
    "length_diff_set",
    "make_element",
    "notation",
    "pairing_2rho",
    "pairing_root_root",
    "pairing_weight_root",
    "parse_element",
    "parse_finite_root",
    "parse_root",
    "qbg_edge",
    "qbg_edges_into",
    "qbg_neighborhood",
    "required_bound",
    "rootsystem",
    "rotate180",
    "translation",
]

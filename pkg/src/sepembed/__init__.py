"""Exact computation of separating re-embeddings of affine schemes.

Polynomials over Q, Gröbner bases, linear parts and cotangent spaces at a
rational point, Z-separating re-embeddings, the restricted Gröbner fan and
border basis scheme ideals.
"""

from .bbs import BBSPresentation, OrderIdeal, bbs_ideal, border
from .cotangent import LinearSpace, cotangent_dim, linear_part, linear_part_ideal, tangent_space
from .embed import Bounded, Certified, EmbeddingReport, certify_optimal, search_optimal_reembedding
from .estimators import CotangentSpace, GroebnerFanEnumerator, SeparatingReembedder
from .exceptions import (
    CapExceededError,
    ExponentOverflowError,
    FlipOnBoundaryError,
    MarkingInconsistentError,
    MathError,
    NoSeparatingTupleError,
    NotContainedInMaximalIdealError,
    PolynomialParseError,
    ProblemFileError,
    RingMismatchError,
    SepembedError,
    UnitIdealError,
    UnknownVariableError,
    ZeroPolynomialError,
    ZNotInLinearPartError,
)
from .gfan import (
    GroebnerCone,
    GroebnerFan,
    enumerate_gfan,
    facets,
    flip,
    groebner_cone,
    li_classes,
    li_set,
    sepdim,
)
from .groebner import (
    Ideal,
    MarkedGB,
    buchberger,
    ideal_membership,
    intersect_with_subring,
    normal_form,
)
from .io import Problem, parse_problem, read_problem
from .orderings import DegRevLex, Elim, Lex, WeightMatrix, compare_terms, make_ordering
from .parser import parse_polynomial
from .poly import Polynomial, Ring, format_polynomial
from .separating import (
    Reembedding,
    SeparatingGB,
    build_reembedding,
    find_z_separating_gb,
    is_coherently_separating,
    is_z_separating,
    reduced_from_separating,
    tail,
)

__version__ = "0.1.0"

__all__ = [
    "BBSPresentation",
    "OrderIdeal",
    "bbs_ideal",
    "border",
    "LinearSpace",
    "cotangent_dim",
    "linear_part",
    "linear_part_ideal",
    "tangent_space",
    "Bounded",
    "Certified",
    "EmbeddingReport",
    "certify_optimal",
    "search_optimal_reembedding",
    "CotangentSpace",
    "GroebnerFanEnumerator",
    "SeparatingReembedder",
    "CapExceededError",
    "ExponentOverflowError",
    "ProblemFileError",
    "UnknownVariableError",
    "ZeroPolynomialError",
    "FlipOnBoundaryError",
    "MarkingInconsistentError",
    "MathError",
    "NoSeparatingTupleError",
    "NotContainedInMaximalIdealError",
    "PolynomialParseError",
    "RingMismatchError",
    "SepembedError",
    "UnitIdealError",
    "ZNotInLinearPartError",
    "GroebnerCone",
    "GroebnerFan",
    "enumerate_gfan",
    "facets",
    "flip",
    "groebner_cone",
    "li_classes",
    "li_set",
    "sepdim",
    "Ideal",
    "MarkedGB",
    "buchberger",
    "ideal_membership",
    "intersect_with_subring",
    "normal_form",
    "Problem",
    "parse_problem",
    "read_problem",
    "DegRevLex",
    "Elim",
    "Lex",
    "WeightMatrix",
    "compare_terms",
    "make_ordering",
    "parse_polynomial",
    "Polynomial",
    "Ring",
    "format_polynomial",
    "Reembedding",
    "SeparatingGB",
    "build_reembedding",
    "find_z_separating_gb",
    "is_coherently_separating",
    "is_z_separating",
    "reduced_from_separating",
    "tail",
]

"""Hilbert functions and alpha invariants of fat points at generic points.

Two engines are provided: a conjectural one for the plane built on Cremona
reduction (:mod:`fatpoints.shgh`) and an exact finite-field interpolation
oracle for any ambient dimension (:mod:`fatpoints.oracle`).
"""

from .cremona import (
    CremonaTrace,
    UnsupportedRangeError,
    cremona_transform,
    enumerate_neg_one_classes,
    standard_basis,
    standardize,
)
from .lattice import (
    BlowupContext,
    DivisorClass,
    UnsupportedDimensionError,
    arithmetic_genus,
    canonical,
    expected_dim,
    format_class,
    intersect,
    parse_class,
)
from .oracle import InterpolationProblem, Oracle, actual_alpha, actual_dim, hilbert_function
from .reductions import (
    InconsistentOracleError,
    alpha_from_dim,
    append_simple,
    clamp,
    dim_from_alpha,
    effective_test,
    h0_of_class,
    normalize,
    parse_multiplicities,
)
from .shgh import DimensionReport, consistency_check_conjectures, shgh_alpha, shgh_dim

__version__ = "0.1.0"

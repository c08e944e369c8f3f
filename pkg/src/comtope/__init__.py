"""Conditional oriented matroids as sign systems."""

from .arrangement import (
    Arrangement,
    Hyperplane,
    apartment_to_com,
    arrangement_sign,
    sign_map,
    topes_from_points,
)
from .axioms import (
    AxiomReport,
    axiom_report,
    check_c,
    check_fs,
    check_se,
    check_sym,
    check_z,
    is_com,
    is_om,
)
from .errors import (
    ComError,
    ConsistencyError,
    DimensionError,
    EmptySystemError,
    FormatError,
    InvalidTopeSetError,
    OnHyperplaneError,
    SizeGuardError,
    UnknownElementError,
)
from .kernels import BACKEND
from .minors import contract, delete, reduce_constant, restrict
from .poset import CovectorPoset, FPolynomial, build_poset, f_polynomial, rank_of, render_polynomial
from .reconstruction import TopeSet, reconstruct_com, reconstruct_om, topes_of
from .signs import (
    GroundSet,
    SignSystem,
    compose,
    leq,
    negate,
    separation,
    sign_vector,
    support,
    validate_topes,
    zero_set,
)

__version__ = "0.1.0"

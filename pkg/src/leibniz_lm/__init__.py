"""Exact finite-dimensional toolkit for Leibniz algebras, Lie-Rinehart algebra
objects in the category of linear maps, and Leibniz algebroids.

Everything is computed exactly over the rationals or a prime field; checkers
return :class:`CheckReport` objects listing every violated law with a basis
witness and the residual vector.
"""

__version__ = "0.1.0"

from .algebra import AModule, CommAlgebra, check_a_module, check_comm_algebra, poly_quotient
from .algebroid import (
    LeibnizAlgebroid,
    attempt_tensor_square_anchor,
    check_leibniz_algebroid,
    check_local,
    hemi_semi_algebroid,
    reduce_algebroid,
    theorem2_functor,
)
from .derivations import derivation_space, universal_derivations
from .exactlin import GF, QQ, field_from_name
from .leibniz import (
    LeibnizAlgebra,
    LieAlgebra,
    check_leibniz,
    check_leibniz_morphism,
    check_lie,
    hemi_semi_product,
    reduce,
    reduced_lie,
    squares_ideal,
    tensor_square,
)
from .lie_rinehart import (
    LieRinehartPair,
    TheoremOneData,
    build_tautological,
    check_lie_rinehart_pair,
    check_lr_module,
    check_theorem1_object,
    derivation_pair,
)
from .lm import LMAlgebraObject, LMLieObject, LMMorphism, LMObject, check_algebra_object, check_lie_object
from .report import CheckReport, PreconditionError, StructureError, Violation

__all__ = [
    "AModule",
    "CheckReport",
    "CommAlgebra",
    "GF",
    "LMAlgebraObject",
    "LMLieObject",
    "LMMorphism",
    "LMObject",
    "LeibnizAlgebra",
    "LeibnizAlgebroid",
    "LieAlgebra",
    "LieRinehartPair",
    "PreconditionError",
    "QQ",
    "StructureError",
    "TheoremOneData",
    "Violation",
    "attempt_tensor_square_anchor",
    "build_tautological",
    "check_a_module",
    "check_algebra_object",
    "check_comm_algebra",
    "check_leibniz",
    "check_leibniz_algebroid",
    "check_leibniz_morphism",
    "check_lie",
    "check_lie_object",
    "check_lie_rinehart_pair",
    "check_local",
    "check_lr_module",
    "check_theorem1_object",
    "derivation_pair",
    "derivation_space",
    "field_from_name",
    "hemi_semi_algebroid",
    "hemi_semi_product",
    "poly_quotient",
    "reduce",
    "reduce_algebroid",
    "reduced_lie",
    "squares_ideal",
    "tensor_square",
    "theorem2_functor",
    "universal_derivations",
]

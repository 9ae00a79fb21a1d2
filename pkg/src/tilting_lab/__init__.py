"""Exact representation theory of the algebras Lambda_n."""

from .algebra import (
    DomainError,
    Representation,
    build_lambda,
    cartan_matrix,
    costandard_rep,
    injective_rep,
    lambda_dimension,
    projective_rep,
    simple_rep,
    standard_rep,
)
from .filtration import M_of, classify_module, is_exceptional, is_self_orthogonal
from .homology import decompose, ext, ext_dims, min_resolution, projective_cover
from .morphisms import Morphism, hom_basis, hom_dim
from .sequences import enumerate_sequences, exhaustive_cross_check, verify_sequence
from .strings import (
    OmegaDescriptor,
    descriptor,
    dual_star,
    dual_star_desc,
    enumerate_indecomposables,
    isomorphic,
    omega,
)
from .tilting import (
    antichains,
    build_poset,
    classify_tilting,
    order_isomorphism_check,
    verify_tilting,
)

__version__ = "0.1.0"


__all__ = [
    "antichains",
    "build_lambda",
    "build_poset",
    "cartan_matrix",
    "classify_module",
    "classify_tilting",
    "costandard_rep",
    "decompose",
    "descriptor",
    "DomainError",
    "dual_star",
    "dual_star_desc",
    "enumerate_indecomposables",
    "enumerate_sequences",
    "exhaustive_cross_check",
    "ext",
    "ext_dims",
    "hom_basis",
    "hom_dim",
    "injective_rep",
    "is_exceptional",
    "is_self_orthogonal",
    "isomorphic",
    "lambda_dimension",
    "M_of",
    "min_resolution",
    "Morphism",
    "omega",
    "OmegaDescriptor",
    "order_isomorphism_check",
    "projective_cover",
    "projective_rep",
    "Representation",
    "simple_rep",
    "standard_rep",
    "verify_sequence",
    "verify_tilting",
]

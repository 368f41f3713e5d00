"""Exact restrictions of Grassmannian Schubert classes to torus-fixed points.

Equivariant K-theory and cohomology, via set-valued tableaux, with the
path-family and diagram-subset models and brute-force oracles alongside.
"""
from .core_index import (
    Box,
    GrassIndex,
    InvalidIndexError,
    Partition,
    complement,
    grass_indices,
    length,
    partition_leq,
    pi,
    pi_inverse,
)
from .laurent import LaurentPolynomial
from .path_models import PathFamily, enumerate_families, enumerate_subsets, ladder_graph, twisted_chain_target
from .restriction import (
    consistency_lowest_degree,
    coordinate_subspace_class,
    positivity_audit,
    restrict_h,
    restrict_k,
    restrict_k_via_nsum,
    union_class_oracle,
)
from .tableaux import SetValuedTableau, enumerate_ssvt, enumerate_ssyt, n_coefficient

__version__ = "0.1.0"

__all__ = [
    "Box",
    "GrassIndex",
    "InvalidIndexError",
    "LaurentPolynomial",
    "Partition",
    "PathFamily",
    "SetValuedTableau",
    "complement",
    "consistency_lowest_degree",
    "coordinate_subspace_class",
    "enumerate_families",
    "enumerate_ssvt",
    "enumerate_ssyt",
    "enumerate_subsets",
    "grass_indices",
    "ladder_graph",
    "length",
    "n_coefficient",
    "partition_leq",
    "pi",
    "pi_inverse",
    "positivity_audit",
    "restrict_h",
    "restrict_k",
    "restrict_k_via_nsum",
    "twisted_chain_target",
    "union_class_oracle",
]

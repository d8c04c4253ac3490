"""Interval categories of finite posets, their zero-relation variants, and derived invariants."""

from .algebra import (
    IntPolynomial,
    ThinCategory,
    cartan_matrix,
    char_poly_exact,
    coxeter_polynomial,
    derived_invariant_report,
    gamma_zero_category,
    incidence_category,
)
from .gamma import GammaData, IdealMap, build_gamma, ideal_map_from_triple, interval_ideal_map
from .poset import Poset, PosetMorphism, chain, interval_poset, is_isomorphic, poset_from_covers, product
from .rep import Module, hom_space, projective_resolution, tilting_module, verify_tilting

__all__ = [
    "GammaData", "IdealMap", "IntPolynomial", "Module", "Poset", "PosetMorphism", "ThinCategory",
    "build_gamma", "cartan_matrix", "chain", "char_poly_exact", "coxeter_polynomial",
    "derived_invariant_report", "gamma_zero_category", "hom_space", "ideal_map_from_triple",
    "incidence_category", "interval_ideal_map", "interval_poset", "is_isomorphic", "poset_from_covers",
    "product", "projective_resolution", "tilting_module", "verify_tilting",
]

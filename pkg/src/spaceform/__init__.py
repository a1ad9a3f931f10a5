"""Exact computation of self-map monoids of spherical space forms.

The odd-dimensional monoid M(G, n) of a space form S^{2n+1}/G, its
group of units, and the even-dimensional monoid of RP^{2n}, all in
exact integer arithmetic, with an independent oracle for
cross-validation on cyclic groups.
"""

from .degree import DegreeHom, Residue, build_degree_hom, d_cyclic, validate_degree_hom
from .endomorphisms import (
    Endomorphism,
    compose,
    enumerate_automorphisms,
    enumerate_endomorphisms,
    identity_endomorphism,
)
from .groups import (
    AdmissibilityReport,
    FiniteGroup,
    direct_product,
    element_order,
    load_group,
    make_cyclic,
    make_from_table,
    make_generalized_quaternion,
    rank_one_check,
)
from .monoid_even import A0, A2, EvenElement, canonicalize, identity_even, multiply_even, odd
from .monoid_odd import EquivalenceGroup, MonoidContext, SpaceFormElement, monoid_context
from .selfmap_oracle import CrossCheckReport, OracleContext, SelfMapClass, compose_selfmaps, cross_check

__version__ = "0.1.0"

__all__ = [
    "A0",
    "A2",
    "AdmissibilityReport",
    "CrossCheckReport",
    "DegreeHom",
    "Endomorphism",
    "EquivalenceGroup",
    "EvenElement",
    "FiniteGroup",
    "MonoidContext",
    "OracleContext",
    "Residue",
    "SelfMapClass",
    "SpaceFormElement",
    "build_degree_hom",
    "canonicalize",
    "compose",
    "compose_selfmaps",
    "cross_check",
    "d_cyclic",
    "direct_product",
    "element_order",
    "enumerate_automorphisms",
    "enumerate_endomorphisms",
    "identity_endomorphism",
    "identity_even",
    "load_group",
    "make_cyclic",
    "make_from_table",
    "make_generalized_quaternion",
    "monoid_context",
    "multiply_even",
    "odd",
    "rank_one_check",
    "validate_degree_hom",
]

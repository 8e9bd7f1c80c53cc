"""Exact combinatorics of f- and h-vectors of triangulated balls."""

from .complexes import (
    CountVector,
    NotAShellingError,
    ShellingCertificate,
    SimplicialComplex,
    cone,
    convert,
    f_vector,
    glue,
    h_from_certificate,
    link,
    ridge_boundary,
    simplex_boundary,
    verify_shelling,
)
from .construction import (
    appendix_shelling,
    complement_ball,
    construct_verified,
    construction_conditions,
)
from .homology import (
    HomologyProfile,
    classify,
    hochster_beta_top,
    reduced_homology,
    smith_normal_form,
)
from .monomials import is_m_vector, lex_ideal_from_hilbert, pseudo_power
from .obstruction import (
    FamilyParams,
    ObstructionReport,
    betti_split_verdict,
    boundary_g,
    conjecture61_predicate,
    enumerate_splits,
    family_certificate,
    family_hvector,
    gconditions,
    peeva_bounds,
    skeleton_search,
    verdict,
    verified_conditions,
)

__all__ = [
    "CountVector",
    "FamilyParams",
    "HomologyProfile",
    "NotAShellingError",
    "ObstructionReport",
    "ShellingCertificate",
    "SimplicialComplex",
    "appendix_shelling",
    "betti_split_verdict",
    "boundary_g",
    "classify",
    "complement_ball",
    "cone",
    "conjecture61_predicate",
    "construct_verified",
    "construction_conditions",
    "convert",
    "enumerate_splits",
    "f_vector",
    "family_certificate",
    "family_hvector",
    "gconditions",
    "glue",
    "h_from_certificate",
    "hochster_beta_top",
    "is_m_vector",
    "lex_ideal_from_hilbert",
    "link",
    "peeva_bounds",
    "pseudo_power",
    "reduced_homology",
    "ridge_boundary",
    "simplex_boundary",
    "skeleton_search",
    "smith_normal_form",
    "verdict",
    "verified_conditions",
    "verify_shelling",
]

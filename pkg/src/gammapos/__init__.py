"""Exact-arithmetic toolkit for Eulerian-family polynomials.

Computes the Eulerian, q-Eulerian, binomial-Eulerian, and derangement
polynomial families, their gamma expansions and symmetric-function analogs,
and the h-polynomials of dual permutohedra and stellohedra, verifying every
identity at desk scale against independent brute-force enumerations.
"""

from .errors import (
    DegreeBoundError,
    InternalConsistencyError,
    NotSymmetricError,
    PalindromicityError,
    ResourceLimitError,
    UsageError,
    ValidationError,
)
from .exactpoly import (
    GammaVector,
    IntPoly1,
    QTPoly,
    QTRPoly,
    TruncSeries,
    gamma_contract,
    gamma_expand,
    is_b_unimodal,
    is_palindromic,
    q_binomial,
    q_factorial,
    q_int,
)
from .permstat import (
    ClassSpec,
    Permutation,
    StatRecord,
    class_inv_poly,
    derangements,
    descent_class_check,
    enumerate_class,
    stats,
)
from .eulerian import (
    FamilyTag,
    binomial_eulerian_poly,
    derangement_poly,
    eulerian_poly,
    q_binomial_eulerian,
    q_eulerian,
    q_eulerian_fix,
)
from .symfun import (
    Ribbon,
    SymPoly,
    SymPolyT,
    binomial_eulerian_symmetric,
    complete_homogeneous,
    derangement_symmetric,
    eulerian_symmetric,
    gamma_symmetric,
    principal_specialization,
    ribbon_maj_poly,
    ribbon_schur,
    schur_expand,
    schur_polynomial,
)
from .polytopes import (
    FVector,
    SimplicialComplex,
    barycentric_subdivision,
    cross_polytope_boundary,
    dual_permutohedron,
    dual_stellohedron,
    f_vector,
    h_polynomial,
    is_flag,
    simplex_boundary,
    stellar_subdivide,
)
from .reports import Report

__version__ = "0.1.0"

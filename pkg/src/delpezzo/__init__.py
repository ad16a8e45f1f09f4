"""Exact Poisson cohomology of Poisson Del Pezzo surfaces."""

from .blowup import (
    GenericityReport,
    PointConfig,
    VanishingSubspace,
    check_generic,
    independent_on_cubics,
    standard_points,
    vanishing_bivector_subspace,
    vanishing_vector_subspace,
)
from .calculus import (
    BivectorField,
    VectorField,
    eval_bivector,
    eval_vector,
    lie_bracket,
    schouten_pi_f,
    schouten_pi_v,
)
from .charts import (
    ProjectivePoint,
    SurfaceKind,
    global_bivector_basis,
    global_vector_basis,
    is_global_bivector,
    is_global_vector,
    transform_bivector,
    transform_vector,
)
from .cohomology import (
    CohomologyProfile,
    DpiMatrix,
    SheafCohomologyTable,
    assemble_dpi_matrix,
    exact_rank,
    poisson_cohomology,
    sheaf_cohomology_table,
)
from .crosscheck import CrosscheckReport, paper_matrix_crosscheck
from .errors import (
    DelPezzoError,
    DimensionMismatch,
    DuplicatePoint,
    EvalAtPole,
    NotGeneric,
    NotVanishing,
    ParseError,
    UnsupportedSurface,
)
from .ratpoly import RatLaurent, monomial_substitute, parse
from .surface import SurfaceSpec

__all__ = [
    "BivectorField",
    "CohomologyProfile",
    "CrosscheckReport",
    "DelPezzoError",
    "DimensionMismatch",
    "DpiMatrix",
    "DuplicatePoint",
    "EvalAtPole",
    "GenericityReport",
    "NotGeneric",
    "NotVanishing",
    "ParseError",
    "PointConfig",
    "ProjectivePoint",
    "RatLaurent",
    "SheafCohomologyTable",
    "SurfaceKind",
    "SurfaceSpec",
    "UnsupportedSurface",
    "VanishingSubspace",
    "VectorField",
    "assemble_dpi_matrix",
    "check_generic",
    "eval_bivector",
    "eval_vector",
    "exact_rank",
    "global_bivector_basis",
    "global_vector_basis",
    "independent_on_cubics",
    "is_global_bivector",
    "is_global_vector",
    "lie_bracket",
    "monomial_substitute",
    "paper_matrix_crosscheck",
    "parse",
    "poisson_cohomology",
    "schouten_pi_f",
    "schouten_pi_v",
    "sheaf_cohomology_table",
    "standard_points",
    "transform_bivector",
    "transform_vector",
    "vanishing_bivector_subspace",
    "vanishing_vector_subspace",
]

__version__ = "0.1.0"

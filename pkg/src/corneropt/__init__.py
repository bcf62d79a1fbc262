"""Exact-arithmetic solvers for corner relaxations of integer programs and
their inverse problems.

Everything computes over arbitrary-precision rationals; there are no
tolerances anywhere.  Column index sets (bases) are 1-based throughout the
public API, matching the usual mathematical convention.
"""

__version__ = "0.1.0"

from .errors import (
    BoxInfeasibleError,
    CapacityError,
    CornerOptError,
    DimensionError,
    DocumentError,
    DomainError,
    PreconditionError,
    RankDeficiencyError,
    SingularMatrixError,
)
from .gcr import (
    ExactnessCheck,
    GcrSolution,
    brute_force_gcr,
    brute_force_ip,
    check_corner_exactness_condition,
    derive_default_box,
    enumerate_feasible_points,
    solve_gcr,
)
from .groupgraph import (
    GroupGraph,
    PathCounts,
    SearchStatus,
    SppResult,
    build_group_graph,
    shortest_path,
    to_dot,
)
from .inverse import (
    InverseResult,
    MultiBasisInverse,
    NormSpec,
    check_inverse_feasible,
    check_positive_basic_support,
    inverse_gcr,
    inverse_ip_oracle,
    inverse_lp_relaxation,
    multi_basis_inverse,
)
from .linalg import (
    IntMatrix,
    SmithNormalForm,
    canonical_mod,
    determinant,
    invert_rational_matrix,
    smith_normal_form,
)
from .lp import (
    Basis,
    IpInstance,
    LpSolution,
    SolveStatus,
    basic_solution,
    enumerate_feasible_bases,
    make_basis,
    reduced_costs,
    solve_lp_simplex,
)
from .sizing import SizeReport, formulation_size_report

__all__ = [
    "__version__",
    "BoxInfeasibleError",
    "CapacityError",
    "CornerOptError",
    "DimensionError",
    "DocumentError",
    "DomainError",
    "PreconditionError",
    "RankDeficiencyError",
    "SingularMatrixError",
    "ExactnessCheck",
    "GcrSolution",
    "brute_force_gcr",
    "brute_force_ip",
    "check_corner_exactness_condition",
    "derive_default_box",
    "enumerate_feasible_points",
    "solve_gcr",
    "GroupGraph",
    "PathCounts",
    "SearchStatus",
    "SppResult",
    "build_group_graph",
    "shortest_path",
    "to_dot",
    "InverseResult",
    "MultiBasisInverse",
    "NormSpec",
    "check_inverse_feasible",
    "check_positive_basic_support",
    "inverse_gcr",
    "inverse_ip_oracle",
    "inverse_lp_relaxation",
    "multi_basis_inverse",
    "IntMatrix",
    "SmithNormalForm",
    "canonical_mod",
    "determinant",
    "invert_rational_matrix",
    "smith_normal_form",
    "Basis",
    "IpInstance",
    "LpSolution",
    "SolveStatus",
    "basic_solution",
    "enumerate_feasible_bases",
    "make_basis",
    "reduced_costs",
    "solve_lp_simplex",
    "SizeReport",
    "formulation_size_report",
]

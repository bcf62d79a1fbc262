"""Exception hierarchy shared across the package."""


class CornerOptError(Exception):
    """Base class for all errors raised by this package."""

    code = "error"


class DimensionError(CornerOptError):
    """Shapes or lengths of the inputs do not line up."""

    code = "dimension"


class DomainError(CornerOptError):
    """An input value is outside the operation's domain (e.g. modulus <= 0)."""

    code = "domain"


class SingularMatrixError(CornerOptError):
    """A matrix that must be nonsingular is singular."""

    code = "singular_matrix"


class RankDeficiencyError(CornerOptError):
    """The constraint matrix does not have full row rank."""

    code = "rank_deficiency"


class CapacityError(CornerOptError):
    """An enumeration exceeded its configured cap."""

    code = "capacity"


class BoxInfeasibleError(CornerOptError):
    """A brute-force search box contains no feasible point.

    Distinct from true infeasibility: a larger box might still succeed.
    """

    code = "box_infeasible"


class PreconditionError(CornerOptError):
    """A documented operation precondition does not hold for the input."""

    code = "precondition"


class DocumentError(CornerOptError):
    """An instance document failed to parse or validate."""

    code = "document"

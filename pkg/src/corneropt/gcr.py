"""Corner relaxation solving, brute-force oracles, and the exactness condition.

The corner relaxation of a basis keeps integrality and the nonnegativity of
the nonbasic variables but lets the basic variables go negative.  Solving it
reduces to the group-graph shortest path; the brute-force routines here stay
independent of that reduction (they work directly off the basis inverse) so
they can serve as oracles for it.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from itertools import product
from typing import Optional, Sequence

from .errors import BoxInfeasibleError, CapacityError, DimensionError, DomainError
from .groupgraph import SearchStatus, build_group_graph, shortest_path
from .lp import Basis, IpInstance, SolveStatus, apply_rational_matrix

_ZERO = Fraction(0)


@dataclass(frozen=True)
class GcrSolution:
    """Outcome of a corner-relaxation (or brute-force IP) solve.

    ``lp_constant`` is the basis term d_B^T A_B^{-1} b; the optimal value
    equals the shortest-path cost plus this constant.  Brute-force IP results
    reuse this shape with a zero constant.
    """

    status: SolveStatus
    x: Optional[tuple[int, ...]]
    value: Optional[Fraction]
    lp_constant: Fraction


def _normalize_objective(instance: IpInstance, objective: Optional[Sequence[Fraction]]) -> tuple[Fraction, ...]:
    obj = tuple(Fraction(v) for v in (objective if objective is not None else instance.c))
    if len(obj) != instance.n:
        raise DimensionError(f"objective has length {len(obj)}, expected {instance.n}")
    return obj


def basis_constant(instance: IpInstance, basis: Basis, objective: Sequence[Fraction]) -> Fraction:
    """The term d_B^T A_B^{-1} b contributed by the basic variables."""
    xb = apply_rational_matrix(basis.inverse, instance.b)
    return sum((objective[i - 1] * v for i, v in zip(basis.indices, xb)), _ZERO)


def _assemble(instance: IpInstance, basis: Basis, counts: Sequence[int]) -> tuple[int, ...]:
    """Full solution vector from nonbasic counts; basic part must be integral."""
    residual = list(instance.b)
    for col, cnt in zip(basis.complement, counts):
        if cnt:
            for i in range(instance.m):
                residual[i] -= instance.a.at(i, col - 1) * cnt
    xb = apply_rational_matrix(basis.inverse, residual)
    assert all(v.denominator == 1 for v in xb), "basic part must be integral"
    x = [0] * instance.n
    for col, cnt in zip(basis.complement, counts):
        x[col - 1] = cnt
    for col, v in zip(basis.indices, xb):
        x[col - 1] = int(v)
    return tuple(x)


def solve_gcr_detailed(
    instance: IpInstance, basis: Basis, objective: Optional[Sequence[Fraction]] = None
):
    """Solve the corner relaxation; also return the graph and path search."""
    obj = _normalize_objective(instance, objective)
    constant = basis_constant(instance, basis, obj)
    graph = build_group_graph(instance, basis, obj)
    result = shortest_path(graph)
    if result.status is SearchStatus.UNREACHABLE:
        return GcrSolution(SolveStatus.INFEASIBLE, None, None, constant), graph, result
    if result.status is SearchStatus.UNBOUNDED:
        return GcrSolution(SolveStatus.UNBOUNDED, None, None, constant), graph, result
    x = _assemble(instance, basis, result.path.counts)
    value = result.cost + constant
    assert value == sum((cv * xv for cv, xv in zip(obj, x)), _ZERO)
    return GcrSolution(SolveStatus.OPTIMAL, x, value, constant), graph, result


def solve_gcr(
    instance: IpInstance, basis: Basis, objective: Optional[Sequence[Fraction]] = None
) -> GcrSolution:
    """Solve the corner relaxation at a basis via the group shortest path."""
    solution, _, _ = solve_gcr_detailed(instance, basis, objective)
    return solution


def brute_force_gcr(
    instance: IpInstance,
    basis: Basis,
    objective: Optional[Sequence[Fraction]] = None,
    *,
    bound: int,
) -> GcrSolution:
    """Oracle solve of the corner relaxation by scanning nonbasic boxes.

    Enumerates every nonbasic count vector in {0..bound}^(n-m), keeping those
    whose induced basic part is integral, and separately scans the same box
    for an integral descent ray (which certifies unboundedness).  Sound and
    complete once ``bound`` reaches the product of the invariant factors.
    Works straight off the basis inverse; no group graph involved.
    """
    if bound < 0:
        raise DomainError("bound must be nonnegative")
    obj = _normalize_objective(instance, objective)
    constant = basis_constant(instance, basis, obj)
    m, k = instance.m, instance.n - instance.m
    det = basis.det
    # adjugate rows: det * A_B^{-1} is integral
    adj = [[int(basis.inverse[i][j] * det) for j in range(m)] for i in range(m)]
    adj_b = [sum(adj[i][j] * instance.b[j] for j in range(m)) for i in range(m)]
    nonbasic_cols = [[instance.a.at(i, col - 1) for i in range(m)] for col in basis.complement]
    obj_n = [obj[col - 1] for col in basis.complement]
    obj_b = [obj[col - 1] for col in basis.indices]

    best_value: Optional[Fraction] = None
    best_x: Optional[tuple[int, ...]] = None
    ray_found = False
    for counts in product(range(bound + 1), repeat=k):
        anc = [0] * m
        for col_vals, cnt in zip(nonbasic_cols, counts):
            if cnt:
                for i in range(m):
                    anc[i] += col_vals[i] * cnt
        t = [sum(adj[i][j] * anc[j] for j in range(m)) for i in range(m)]
        if all((adj_b[i] - t[i]) % det == 0 for i in range(m)):
            xb = [(adj_b[i] - t[i]) // det for i in range(m)]
            value = sum((ov * cv for ov, cv in zip(obj_n, counts)), _ZERO)
            value += sum((ov * bv for ov, bv in zip(obj_b, xb)), _ZERO)
            if best_value is None or value < best_value:
                best_value = value
                x = [0] * instance.n
                for col, cnt in zip(basis.complement, counts):
                    x[col - 1] = cnt
                for col, bv in zip(basis.indices, xb):
                    x[col - 1] = bv
                best_x = tuple(x)
        if any(counts) and all(t[i] % det == 0 for i in range(m)):
            direction_cost = sum((ov * cv for ov, cv in zip(obj_n, counts)), _ZERO)
            direction_cost -= sum((ov * Fraction(t[i], det) for i, ov in enumerate(obj_b)), _ZERO)
            if direction_cost < 0:
                ray_found = True

    if best_value is None:
        raise BoxInfeasibleError(
            f"no solution with nonbasic counts in 0..{bound}; "
            "a larger bound may still find one"
        )
    if ray_found:
        return GcrSolution(SolveStatus.UNBOUNDED, None, None, constant)
    return GcrSolution(SolveStatus.OPTIMAL, best_x, best_value, constant)


@dataclass(frozen=True)
class ExactnessCheck:
    """Squared comparison of the rhs-to-cone-boundary distance against the
    determinant-scaled largest nonbasic column norm."""

    holds: bool
    lhs_squared: Fraction
    rhs_squared: Fraction


def check_corner_exactness_condition(instance: IpInstance, basis: Basis) -> ExactnessCheck:
    """Sufficient condition for the corner relaxation to solve the IP exactly.

    All arithmetic stays rational by comparing squared L2 quantities.
    """
    xb = apply_rational_matrix(basis.inverse, instance.b)
    rhs_squared = _ZERO
    det_sq = Fraction(basis.det * basis.det)
    for col in basis.complement:
        norm_sq = Fraction(sum(v * v for v in instance.a.col(col - 1)))
        rhs_squared = max(rhs_squared, det_sq * norm_sq)
    if any(v < 0 for v in xb):
        # rhs outside the basis cone: distance zero, condition cannot hold
        return ExactnessCheck(False, _ZERO, rhs_squared)
    lhs_squared = None
    for i, row in enumerate(basis.inverse):
        norm_sq = sum((v * v for v in row), _ZERO)
        dist_sq = xb[i] * xb[i] / norm_sq
        if lhs_squared is None or dist_sq < lhs_squared:
            lhs_squared = dist_sq
    return ExactnessCheck(lhs_squared >= rhs_squared, lhs_squared, rhs_squared)


def derive_default_box(instance: IpInstance) -> tuple[int, ...]:
    """Per-variable upper bounds implied by all-nonnegative constraint rows.

    Only rows with every coefficient nonnegative and a nonnegative rhs yield
    valid bounds; if some variable is not covered, enumeration cannot be
    proven finite and an explicit box is required.
    """
    bounding_rows = [
        i
        for i in range(instance.m)
        if instance.b[i] >= 0 and all(v >= 0 for v in instance.a.row(i))
    ]
    box = []
    for j in range(instance.n):
        bounds = [
            instance.b[i] // instance.a.at(i, j)
            for i in bounding_rows
            if instance.a.at(i, j) > 0
        ]
        if not bounds:
            raise CapacityError(
                f"no implied upper bound for variable {j + 1}; pass an explicit box"
            )
        box.append(min(bounds))
    return tuple(box)


def enumerate_feasible_points(instance: IpInstance, box: Sequence[int]) -> list[tuple[int, ...]]:
    """All integer points of the feasible set inside [0, box], lexicographic."""
    if len(box) != instance.n:
        raise DimensionError(f"box has length {len(box)}, expected {instance.n}")
    if any(v < 0 for v in box):
        raise DomainError("box entries must be nonnegative")
    n, m = instance.n, instance.m
    cols = [[instance.a.at(i, j) for i in range(m)] for j in range(n)]
    nonneg_rows = [i for i in range(m) if all(instance.a.at(i, j) >= 0 for j in range(n))]
    points: list[tuple[int, ...]] = []
    partial = [0] * n

    def rec(j: int, residual: list[int]) -> None:
        if j == n:
            if all(v == 0 for v in residual):
                points.append(tuple(partial))
            return
        col = cols[j]
        res = list(residual)
        for v in range(box[j] + 1):
            if v:
                for i in range(m):
                    res[i] -= col[i]
            if any(res[i] < 0 for i in nonneg_rows):
                break  # larger v only shrinks these residuals further
            partial[j] = v
            rec(j + 1, res)
        partial[j] = 0

    rec(0, list(instance.b))
    return points


def brute_force_ip(
    instance: IpInstance,
    objective: Optional[Sequence[Fraction]] = None,
    box: Optional[Sequence[int]] = None,
) -> GcrSolution:
    """Exhaustive integer-program solve over a finite box (ground-truth oracle)."""
    obj = _normalize_objective(instance, objective)
    bounds = tuple(box) if box is not None else derive_default_box(instance)
    points = enumerate_feasible_points(instance, bounds)
    if not points:
        raise BoxInfeasibleError(f"no feasible integer point inside box {bounds}")
    best_x = None
    best_value = None
    for x in points:
        value = sum((cv * xv for cv, xv in zip(obj, x)), _ZERO)
        if best_value is None or value < best_value:
            best_value, best_x = value, x
    return GcrSolution(SolveStatus.OPTIMAL, best_x, best_value, _ZERO)

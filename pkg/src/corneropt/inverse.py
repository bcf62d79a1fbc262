"""Inverse solvers: find the objective closest to a target that makes a given
feasible point optimal.

The corner-relaxation inverse is solved through its shortest-path form: one
dual value per group-graph vertex, one constraint per implicit arc, and the
perturbation split d = target - e + f with e, f >= 0.  All solves use the
exact simplex, so membership tests compare rationals with no tolerance.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Literal, Optional, Sequence

from .errors import DimensionError, DomainError, PreconditionError
from .gcr import derive_default_box, enumerate_feasible_points, solve_gcr
from .groupgraph import build_group_graph
from .lp import (
    DEFAULT_BASIS_CAP,
    Basis,
    GeneralLp,
    IpInstance,
    SolveStatus,
    enumerate_feasible_bases,
)

_ZERO = Fraction(0)
_ONE = Fraction(1)


@dataclass(frozen=True)
class NormSpec:
    """Weighted L1 or L-infinity distance on objective space.

    A zero weight frees that coordinate: perturbing it costs nothing.
    """

    kind: Literal["l1", "linf"] = "l1"
    omega: Optional[tuple[Fraction, ...]] = None

    def weights_for(self, n: int) -> tuple[Fraction, ...]:
        if self.omega is None:
            return (_ONE,) * n
        if len(self.omega) != n:
            raise DimensionError(f"omega has length {len(self.omega)}, expected {n}")
        weights = tuple(Fraction(v) for v in self.omega)
        if any(v < 0 for v in weights):
            raise DomainError("omega components must be nonnegative")
        return weights

    def distance(self, d: Sequence[Fraction], target: Sequence[Fraction]) -> Fraction:
        weights = self.weights_for(len(target))
        gaps = [w * abs(a - b) for w, a, b in zip(weights, d, target)]
        if self.kind == "l1":
            return sum(gaps, _ZERO)
        return max(gaps, default=_ZERO)


@dataclass(frozen=True)
class InverseResult:
    status: SolveStatus
    d_star: tuple[Fraction, ...]
    value: Fraction
    certificate_y: tuple[Fraction, ...]
    basis: Optional[Basis]


@dataclass(frozen=True)
class BasisOutcome:
    basis: Basis
    result: Optional[InverseResult]
    skipped_reason: Optional[str]


@dataclass(frozen=True)
class MultiBasisInverse:
    per_basis: tuple[BasisOutcome, ...]
    best: InverseResult


def _normalize_target(instance: IpInstance, target: Optional[Sequence[Fraction]]) -> tuple[Fraction, ...]:
    out = tuple(Fraction(v) for v in (target if target is not None else instance.c))
    if len(out) != instance.n:
        raise DimensionError(f"target has length {len(out)}, expected {instance.n}")
    return out


def _require_solves_constraints(instance: IpInstance, x0: Sequence[Fraction]) -> None:
    if len(x0) != instance.n:
        raise PreconditionError(f"x0 has length {len(x0)}, expected {instance.n}")
    for i in range(instance.m):
        acc = sum((Fraction(x0[j]) * instance.a.at(i, j) for j in range(instance.n)), _ZERO)
        if acc != instance.b[i]:
            raise PreconditionError(f"x0 violates constraint row {i + 1}")


def _require_integer(x0: Sequence[Fraction]) -> tuple[int, ...]:
    vals = [Fraction(v) for v in x0]
    if any(v.denominator != 1 for v in vals):
        raise PreconditionError("x0 must be integral")
    return tuple(int(v) for v in vals)


def _require_gcr_feasible(instance: IpInstance, basis: Basis, x0: Sequence[int]) -> tuple[int, ...]:
    x = _require_integer(x0)
    _require_solves_constraints(instance, x)
    for col in basis.complement:
        if x[col - 1] < 0:
            raise PreconditionError(
                f"x0 is not feasible for the corner relaxation at basis {basis.indices}: "
                f"nonbasic component {col} is negative"
            )
    return x


def _norm_objective(
    lp: GeneralLp, e: list[int], f: list[int], weights: Sequence[Fraction], kind: str
) -> None:
    """Set the distance objective; for L-inf this appends the bound variable."""
    if kind == "l1":
        coeffs = {}
        for k, w in enumerate(weights):
            if w:
                coeffs[e[k]] = w
                coeffs[f[k]] = w
        lp.set_objective(coeffs)
    else:
        t = lp.add_var()
        for k, w in enumerate(weights):
            if w:
                lp.add_constraint({e[k]: w, f[k]: w, t: Fraction(-1)}, "le", 0)
        lp.set_objective({t: _ONE})


def inverse_gcr(
    instance: IpInstance,
    basis: Basis,
    x0: Sequence[int],
    target: Optional[Sequence[Fraction]] = None,
    norm: NormSpec = NormSpec(),
) -> InverseResult:
    """Closest objective to the target making x0 optimal for the corner
    relaxation at the basis, via the inverse-shortest-path LP.

    Variables in fixed order (e, f, y); one dual value per graph vertex, a
    source anchor, a destination equation matching the cost of x0's path and
    one constraint per implicit arc.  The feasible region always contains a
    point because the inverse-feasible set is a cone containing zero.
    """
    tgt = _normalize_target(instance, target)
    x = _require_gcr_feasible(instance, basis, x0)
    graph = build_group_graph(instance, basis, tgt)
    n, m = instance.n, instance.m
    k = n - m

    # reduced-cost map: R(d)_j = d_{N_j} - sum_i W[i][j] d_{B_i}
    w_mat = [
        [
            sum(
                (basis.inverse[i][l] * instance.a.at(l, col - 1) for l in range(m)),
                _ZERO,
            )
            for col in basis.complement
        ]
        for i in range(m)
    ]
    rcoef: list[dict[int, Fraction]] = []
    for j, col in enumerate(basis.complement):
        coef = {col - 1: _ONE}
        for i, bcol in enumerate(basis.indices):
            if w_mat[i][j]:
                coef[bcol - 1] = -w_mat[i][j]
        rcoef.append(coef)

    lp = GeneralLp()
    e = lp.add_vars(n)
    f = lp.add_vars(n)
    y = lp.add_vars(graph.vertex_count, nonneg=False)

    lp.add_constraint({y[0]: _ONE}, "eq", 0)

    x0_n = [x[col - 1] for col in basis.complement]
    rho: dict[int, Fraction] = {}
    for j, coef in enumerate(rcoef):
        if x0_n[j]:
            for pos, cv in coef.items():
                rho[pos] = rho.get(pos, _ZERO) + x0_n[j] * cv
    dest = graph.encode(graph.destination)
    dest_coeffs: dict[int, Fraction] = {y[dest]: _ONE}
    for pos, cv in rho.items():
        if cv:
            dest_coeffs[e[pos]] = dest_coeffs.get(e[pos], _ZERO) + cv
            dest_coeffs[f[pos]] = dest_coeffs.get(f[pos], _ZERO) - cv
    rhs_dest = sum((w * cnt for w, cnt in zip(graph.weights, x0_n)), _ZERO)
    lp.add_constraint(dest_coeffs, "eq", rhs_dest)

    for j in range(k):
        coef = rcoef[j]
        for u in range(graph.vertex_count):
            v = graph.neighbor(u, j)
            coeffs: dict[int, Fraction] = {}
            if v != u:
                coeffs[y[v]] = _ONE
                coeffs[y[u]] = -_ONE
            for pos, cv in coef.items():
                coeffs[e[pos]] = coeffs.get(e[pos], _ZERO) + cv
                coeffs[f[pos]] = coeffs.get(f[pos], _ZERO) - cv
            lp.add_constraint(coeffs, "le", graph.weights[j])

    weights = norm.weights_for(n)
    _norm_objective(lp, e, f, weights, norm.kind)
    status, values, objective_value = lp.solve()
    assert status is SolveStatus.OPTIMAL, "inverse LP is always feasible and bounded"
    d_star = tuple(tgt[i] - values[e[i]] + values[f[i]] for i in range(n))
    certificate = tuple(values[yi] for yi in y)
    return InverseResult(SolveStatus.OPTIMAL, d_star, objective_value, certificate, basis)


def inverse_lp_relaxation(
    instance: IpInstance,
    x0: Sequence[Fraction],
    target: Optional[Sequence[Fraction]] = None,
    norm: NormSpec = NormSpec(),
) -> InverseResult:
    """Closest objective to the target making x0 optimal for the LP relaxation.

    Strong duality: d is inverse-feasible iff some y satisfies A^T y <= d and
    d.x0 = b.y; both conditions are linear in (d, y).
    """
    tgt = _normalize_target(instance, target)
    x = [Fraction(v) for v in x0]
    _require_solves_constraints(instance, x)
    if any(v < 0 for v in x):
        raise PreconditionError("x0 must be nonnegative for the LP relaxation")
    n, m = instance.n, instance.m

    lp = GeneralLp()
    e = lp.add_vars(n)
    f = lp.add_vars(n)
    y = lp.add_vars(m, nonneg=False)

    for col in range(n):
        coeffs: dict[int, Fraction] = {e[col]: _ONE, f[col]: -_ONE}
        for i in range(m):
            aij = instance.a.at(i, col)
            if aij:
                coeffs[y[i]] = Fraction(aij)
        lp.add_constraint(coeffs, "le", tgt[col])

    coeffs = {}
    for col in range(n):
        if x[col]:
            coeffs[e[col]] = -x[col]
            coeffs[f[col]] = x[col]
    for i in range(m):
        if instance.b[i]:
            coeffs[y[i]] = Fraction(-instance.b[i])
    rhs = -sum((tv * xv for tv, xv in zip(tgt, x)), _ZERO)
    lp.add_constraint(coeffs, "eq", rhs)

    weights = norm.weights_for(n)
    _norm_objective(lp, e, f, weights, norm.kind)
    status, values, objective_value = lp.solve()
    assert status is SolveStatus.OPTIMAL, "inverse LP is always feasible and bounded"
    d_star = tuple(tgt[i] - values[e[i]] + values[f[i]] for i in range(n))
    certificate = tuple(values[yi] for yi in y)
    return InverseResult(SolveStatus.OPTIMAL, d_star, objective_value, certificate, None)


def inverse_ip_oracle(
    instance: IpInstance,
    x0: Sequence[int],
    target: Optional[Sequence[Fraction]] = None,
    norm: NormSpec = NormSpec(),
    box: Optional[Sequence[int]] = None,
) -> InverseResult:
    """Ground-truth inverse IP over an explicitly enumerated feasible set.

    One optimality cut d.(x - x0) >= 0 per feasible point, no filtering.
    """
    tgt = _normalize_target(instance, target)
    x = _require_integer(x0)
    _require_solves_constraints(instance, x)
    if any(v < 0 for v in x):
        raise PreconditionError("x0 must be nonnegative for the IP")
    bounds = tuple(box) if box is not None else derive_default_box(instance)
    if len(bounds) != instance.n:
        raise DimensionError(f"box has length {len(bounds)}, expected {instance.n}")
    if any(xv > bv for xv, bv in zip(x, bounds)):
        raise PreconditionError("box does not contain x0")
    points = enumerate_feasible_points(instance, bounds)
    assert x in points

    n = instance.n
    lp = GeneralLp()
    e = lp.add_vars(n)
    f = lp.add_vars(n)
    for point in points:
        if point == x:
            continue
        coeffs: dict[int, Fraction] = {}
        rhs = _ZERO
        for col in range(n):
            diff = point[col] - x[col]
            if diff:
                coeffs[e[col]] = Fraction(-diff)
                coeffs[f[col]] = Fraction(diff)
                rhs -= tgt[col] * diff
        lp.add_constraint(coeffs, "ge", rhs)

    weights = norm.weights_for(n)
    _norm_objective(lp, e, f, weights, norm.kind)
    status, values, objective_value = lp.solve()
    assert status is SolveStatus.OPTIMAL
    d_star = tuple(tgt[i] - values[e[i]] + values[f[i]] for i in range(n))
    return InverseResult(SolveStatus.OPTIMAL, d_star, objective_value, (), None)


def multi_basis_inverse(
    instance: IpInstance,
    x0: Sequence[int],
    target: Optional[Sequence[Fraction]] = None,
    norm: NormSpec = NormSpec(),
    cap: int = DEFAULT_BASIS_CAP,
) -> MultiBasisInverse:
    """Inverse corner relaxation over every feasible basis.

    Bases where x0 has a negative nonbasic component are recorded as skipped
    (x0 is not feasible for that corner relaxation).  The best result is the
    minimum value, ties broken by the lexicographically smallest basis.
    """
    x = _require_integer(x0)
    _require_solves_constraints(instance, x)
    outcomes: list[BasisOutcome] = []
    best: Optional[InverseResult] = None
    for basis in enumerate_feasible_bases(instance, cap):
        if any(x[col - 1] < 0 for col in basis.complement):
            outcomes.append(
                BasisOutcome(basis, None, "x0 has a negative nonbasic component")
            )
            continue
        result = inverse_gcr(instance, basis, x, target, norm)
        outcomes.append(BasisOutcome(basis, result, None))
        if best is None or (result.value, result.basis.indices) < (best.value, best.basis.indices):
            best = result
    if best is None:
        raise PreconditionError(
            "x0 is not feasible for the corner relaxation at any feasible basis"
        )
    return MultiBasisInverse(tuple(outcomes), best)


def check_inverse_feasible(
    instance: IpInstance, basis: Basis, x0: Sequence[int], d: Sequence[Fraction]
) -> bool:
    """True iff x0 is optimal for the corner relaxation at the basis under d."""
    x = _require_gcr_feasible(instance, basis, x0)
    dv = tuple(Fraction(v) for v in d)
    if len(dv) != instance.n:
        raise DimensionError(f"d has length {len(dv)}, expected {instance.n}")
    solution = solve_gcr(instance, basis, dv)
    if solution.status is not SolveStatus.OPTIMAL:
        return False
    return solution.value == sum((a * b for a, b in zip(dv, x)), _ZERO)


def check_positive_basic_support(x0: Sequence[int], basis: Basis) -> bool:
    """True iff every basic component of x0 is strictly positive."""
    return all(Fraction(x0[i - 1]) > 0 for i in basis.indices)

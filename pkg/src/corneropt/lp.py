"""Standard-form LP model and an exact rational simplex solver.

The simplex uses Bland's pivoting rule throughout (lowest eligible index,
ties in the ratio test broken by the lowest basic index), which guarantees
termination and makes every reported optimum deterministic.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum
from fractions import Fraction
from itertools import combinations
from typing import Optional, Sequence

from .errors import (
    CapacityError,
    DimensionError,
    RankDeficiencyError,
    SingularMatrixError,
)
from .linalg import IntMatrix, RationalMatrix, determinant, invert_rational_matrix

DEFAULT_BASIS_CAP = 10**6

_ZERO = Fraction(0)


class SolveStatus(str, Enum):
    OPTIMAL = "optimal"
    INFEASIBLE = "infeasible"
    UNBOUNDED = "unbounded"


def validate_full_row_rank(a: IntMatrix) -> None:
    """Raise RankDeficiencyError naming the first row dependent on earlier ones."""
    pivot_rows: list[list[Fraction]] = []
    pivot_cols: list[int] = []
    for i in range(a.rows):
        row = [Fraction(v) for v in a.row(i)]
        for col, prow in zip(pivot_cols, pivot_rows):
            f = row[col]
            if f:
                row = [x - f * y for x, y in zip(row, prow)]
        lead = next((j for j, v in enumerate(row) if v != 0), None)
        if lead is None:
            raise RankDeficiencyError(
                f"constraint matrix is rank deficient: row {i + 1} is a linear "
                "combination of earlier rows"
            )
        lv = row[lead]
        pivot_rows.append([x / lv for x in row])
        pivot_cols.append(lead)


@dataclass(frozen=True)
class IpInstance:
    """Forward problem data: min c.x subject to a x = b, x >= 0 (integral for the IP)."""

    a: IntMatrix
    b: tuple[int, ...]
    c: tuple[Fraction, ...]

    def __post_init__(self) -> None:
        if self.a.rows > self.a.cols:
            raise DimensionError(
                f"need m <= n, got {self.a.rows} rows and {self.a.cols} columns"
            )
        if len(self.b) != self.a.rows:
            raise DimensionError(f"b has length {len(self.b)}, expected {self.a.rows}")
        if len(self.c) != self.a.cols:
            raise DimensionError(f"c has length {len(self.c)}, expected {self.a.cols}")
        validate_full_row_rank(self.a)

    @classmethod
    def create(
        cls,
        a: Sequence[Sequence[int]],
        b: Sequence[int],
        c: Sequence[Fraction | int],
    ) -> "IpInstance":
        return cls(
            IntMatrix.from_rows(a),
            tuple(int(v) for v in b),
            tuple(Fraction(v) for v in c),
        )

    @property
    def m(self) -> int:
        return self.a.rows

    @property
    def n(self) -> int:
        return self.a.cols


@dataclass(frozen=True)
class Basis:
    """An ordered m-subset of column indices (1-based) with nonsingular A_B."""

    indices: tuple[int, ...]
    complement: tuple[int, ...]
    inverse: RationalMatrix
    det: int


def make_basis(instance: IpInstance, indices: Sequence[int]) -> Basis:
    idx = tuple(int(i) for i in indices)
    if len(idx) != instance.m:
        raise DimensionError(f"basis needs {instance.m} indices, got {len(idx)}")
    if len(set(idx)) != len(idx) or any(i < 1 or i > instance.n for i in idx):
        raise DimensionError(f"basis indices must be distinct and within 1..{instance.n}")
    if list(idx) != sorted(idx):
        raise DimensionError("basis indices must be in increasing order")
    sub = instance.a.submatrix_cols([i - 1 for i in idx])
    det = determinant(sub)
    if det == 0:
        raise SingularMatrixError(f"columns {idx} form a singular basis matrix")
    inverse = invert_rational_matrix(sub)
    complement = tuple(j for j in range(1, instance.n + 1) if j not in set(idx))
    return Basis(idx, complement, inverse, det)


def apply_rational_matrix(matrix: RationalMatrix, vector: Sequence[Fraction | int]) -> tuple[Fraction, ...]:
    return tuple(sum((row[j] * vector[j] for j in range(len(row))), _ZERO) for row in matrix)


def basic_solution(instance: IpInstance, basis: Basis) -> tuple[Fraction, ...]:
    """The basic solution x with x_B = A_B^{-1} b and x_N = 0."""
    xb = apply_rational_matrix(basis.inverse, instance.b)
    x = [_ZERO] * instance.n
    for pos, col in enumerate(basis.indices):
        x[col - 1] = xb[pos]
    return tuple(x)


def reduced_costs(
    instance: IpInstance, basis: Basis, objective: Sequence[Fraction]
) -> tuple[Fraction, ...]:
    """Reduced costs of the nonbasic columns under the given objective."""
    if len(objective) != instance.n:
        raise DimensionError(f"objective has length {len(objective)}, expected {instance.n}")
    d_b = [objective[i - 1] for i in basis.indices]
    m = instance.m
    # row vector d_B^T A_B^{-1}
    u = [sum((d_b[i] * basis.inverse[i][j] for i in range(m)), _ZERO) for j in range(m)]
    out = []
    for col in basis.complement:
        acc = objective[col - 1]
        for i in range(m):
            aij = instance.a.at(i, col - 1)
            if aij:
                acc -= u[i] * aij
        out.append(acc)
    return tuple(out)


def enumerate_feasible_bases(instance: IpInstance, cap: int = DEFAULT_BASIS_CAP) -> list[Basis]:
    """All feasible bases in lexicographic order of their index tuples.

    Degenerate feasible bases (a zero basic component) are included.  Raises
    CapacityError as soon as more than ``cap`` feasible bases are found.
    """
    if cap < 1:
        raise DimensionError("cap must be at least 1")
    found: list[Basis] = []
    for combo in combinations(range(1, instance.n + 1), instance.m):
        sub = instance.a.submatrix_cols([i - 1 for i in combo])
        if determinant(sub) == 0:
            continue
        inverse = invert_rational_matrix(sub)
        xb = apply_rational_matrix(inverse, instance.b)
        if any(v < 0 for v in xb):
            continue
        if len(found) + 1 > cap:
            raise CapacityError(
                f"feasible-basis enumeration exceeded cap={cap}: "
                f"reached {cap + 1} bases with more combinations left"
            )
        found.append(make_basis(instance, combo))
    return found


@dataclass(frozen=True)
class LpSolution:
    status: SolveStatus
    x: Optional[tuple[Fraction, ...]]
    value: Optional[Fraction]
    basis: Optional[Basis]


def _recompute_zrow(
    tableau: list[list[Fraction]], basis: list[int], cost: Sequence[Fraction]
) -> list[Fraction]:
    """Reduced-cost row (plus negated objective in the last slot) for a basis."""
    width = len(tableau[0]) if tableau else len(cost) + 1
    zrow = list(cost) + [_ZERO] * (width - len(cost))
    for i, bi in enumerate(basis):
        cb = cost[bi]
        if cb:
            row = tableau[i]
            for j in range(width):
                if row[j]:
                    zrow[j] -= cb * row[j]
    return zrow


def _pivot(
    tableau: list[list[Fraction]],
    zrow: list[Fraction],
    basis: list[int],
    row: int,
    col: int,
) -> None:
    # update only over the pivot row's support; arc-style tableaus stay sparse
    prow = tableau[row]
    piv = prow[col]
    if piv != 1:
        prow = [v / piv for v in prow]
        tableau[row] = prow
    support = [j for j, v in enumerate(prow) if v]
    for trow in tableau:
        if trow is prow:
            continue
        f = trow[col]
        if f:
            for j in support:
                trow[j] -= f * prow[j]
    f = zrow[col]
    if f:
        for j in support:
            zrow[j] -= f * prow[j]
    basis[row] = col


def _bland_step(
    tableau: list[list[Fraction]], zrow: list[Fraction], basis: list[int], ncols: int
) -> str:
    """One simplex iteration; returns 'optimal', 'unbounded' or 'pivoted'."""
    enter = next((j for j in range(ncols) if zrow[j] < 0), None)
    if enter is None:
        return "optimal"
    best = None
    candidates: list[int] = []
    for i, row in enumerate(tableau):
        coeff = row[enter]
        if coeff > 0:
            ratio = row[-1] / coeff
            if best is None or ratio < best:
                best = ratio
                candidates = [i]
            elif ratio == best:
                candidates.append(i)
    if best is None:
        return "unbounded"
    leave = min(candidates, key=lambda i: basis[i])
    _pivot(tableau, zrow, basis, leave, enter)
    return "pivoted"


def simplex_standard_form(
    a: Sequence[Sequence[Fraction]],
    b: Sequence[Fraction],
    c: Sequence[Fraction],
    *,
    drop_redundant: bool = False,
) -> tuple[SolveStatus, Optional[list[Fraction]], Optional[Fraction], list[int]]:
    """Exact two-phase simplex for min c.x subject to a x = b, x >= 0.

    Returns (status, x, value, basic column indices).  Redundant rows found
    in phase 1 either raise RankDeficiencyError or are dropped, depending on
    ``drop_redundant``.
    """
    m = len(a)
    n = len(c)
    tableau: list[list[Fraction]] = []
    for i in range(m):
        row = [Fraction(v) for v in a[i]]
        rhs = Fraction(b[i])
        if rhs < 0:
            row = [-v for v in row]
            rhs = -rhs
        art = [Fraction(1) if k == i else _ZERO for k in range(m)]
        tableau.append(row + art + [rhs])
    basis = [n + i for i in range(m)]

    phase1_cost = [_ZERO] * n + [Fraction(1)] * m
    zrow = _recompute_zrow(tableau, basis, phase1_cost)
    while True:
        outcome = _bland_step(tableau, zrow, basis, n + m)
        if outcome == "optimal":
            break
        if outcome == "unbounded":  # cannot happen: phase-1 objective is bounded below
            raise AssertionError("phase 1 reported unbounded")
    phase1_value = sum((phase1_cost[basis[i]] * tableau[i][-1] for i in range(m)), _ZERO)
    if phase1_value > 0:
        return SolveStatus.INFEASIBLE, None, None, []

    # Drive any leftover artificial variables (all at zero level) out of the basis.
    redundant_rows: list[int] = []
    for i in range(m):
        if basis[i] >= n:
            col = next((j for j in range(n) if tableau[i][j] != 0), None)
            if col is None:
                redundant_rows.append(i)
            else:
                _pivot(tableau, zrow, basis, i, col)
    if redundant_rows:
        if not drop_redundant:
            raise RankDeficiencyError(
                f"phase 1 found redundant constraint row {redundant_rows[0] + 1}"
            )
        tableau = [row for i, row in enumerate(tableau) if i not in set(redundant_rows)]
        basis = [bi for i, bi in enumerate(basis) if i not in set(redundant_rows)]

    tableau = [row[:n] + [row[-1]] for row in tableau]
    cost = list(c)
    zrow = _recompute_zrow(tableau, basis, cost)
    while True:
        outcome = _bland_step(tableau, zrow, basis, n)
        if outcome == "optimal":
            break
        if outcome == "unbounded":
            return SolveStatus.UNBOUNDED, None, None, []

    x = [_ZERO] * n
    for i, bi in enumerate(basis):
        x[bi] = tableau[i][-1]
    value = sum((cv * xv for cv, xv in zip(c, x)), _ZERO)
    return SolveStatus.OPTIMAL, x, value, sorted(basis)


def solve_lp_simplex(
    instance: IpInstance, objective: Optional[Sequence[Fraction]] = None
) -> LpSolution:
    """Solve the LP relaxation exactly; on success the optimal basis is attached."""
    obj = tuple(Fraction(v) for v in (objective if objective is not None else instance.c))
    if len(obj) != instance.n:
        raise DimensionError(f"objective has length {len(obj)}, expected {instance.n}")
    rows = [[Fraction(v) for v in instance.a.row(i)] for i in range(instance.m)]
    status, x, value, basic_cols = simplex_standard_form(
        rows, [Fraction(v) for v in instance.b], obj
    )
    if status is not SolveStatus.OPTIMAL:
        return LpSolution(status, None, None, None)
    basis = make_basis(instance, tuple(j + 1 for j in basic_cols))
    return LpSolution(status, tuple(x), value, basis)


class GeneralLp:
    """Builder for small LPs in general form, solved by the exact simplex.

    Variables are registered in a fixed order (free variables are split into
    a difference of two nonnegative columns; slack columns follow in
    constraint order), so results are deterministic.
    """

    _SENSES = ("le", "ge", "eq")

    def __init__(self) -> None:
        self._nonneg: list[bool] = []
        self._objective: dict[int, Fraction] = {}
        self._constraints: list[tuple[dict[int, Fraction], str, Fraction]] = []

    def add_var(self, *, nonneg: bool = True) -> int:
        self._nonneg.append(nonneg)
        return len(self._nonneg) - 1

    def add_vars(self, count: int, *, nonneg: bool = True) -> list[int]:
        return [self.add_var(nonneg=nonneg) for _ in range(count)]

    def set_objective(self, coeffs: dict[int, Fraction]) -> None:
        self._objective = {k: Fraction(v) for k, v in coeffs.items() if v}

    def add_constraint(self, coeffs: dict[int, Fraction], sense: str, rhs: Fraction | int) -> None:
        if sense not in self._SENSES:
            raise DimensionError(f"unknown constraint sense {sense!r}")
        self._constraints.append(
            ({k: Fraction(v) for k, v in coeffs.items() if v}, sense, Fraction(rhs))
        )

    def solve(self) -> tuple[SolveStatus, Optional[list[Fraction]], Optional[Fraction]]:
        columns: list[tuple[int, int]] = []  # (var index, sign) per structural column
        col_of_var: list[list[int]] = []
        for vi, nonneg in enumerate(self._nonneg):
            if nonneg:
                col_of_var.append([len(columns)])
                columns.append((vi, 1))
            else:
                col_of_var.append([len(columns), len(columns) + 1])
                columns.append((vi, 1))
                columns.append((vi, -1))
        nstruct = len(columns)
        nslack = sum(1 for _, sense, _ in self._constraints if sense != "eq")
        ncols = nstruct + nslack

        a: list[list[Fraction]] = []
        b: list[Fraction] = []
        slack_pos = nstruct
        for coeffs, sense, rhs in self._constraints:
            row = [_ZERO] * ncols
            for vi, cv in coeffs.items():
                for col in col_of_var[vi]:
                    _, sign = columns[col]
                    row[col] = cv * sign
            if sense == "le":
                row[slack_pos] = Fraction(1)
                slack_pos += 1
            elif sense == "ge":
                row[slack_pos] = Fraction(-1)
                slack_pos += 1
            a.append(row)
            b.append(rhs)

        c = [_ZERO] * ncols
        for vi, cv in self._objective.items():
            for col in col_of_var[vi]:
                _, sign = columns[col]
                c[col] = cv * sign

        status, x, value, _ = simplex_standard_form(a, b, c, drop_redundant=True)
        if status is not SolveStatus.OPTIMAL:
            return status, None, None
        values: list[Fraction] = []
        for vi in range(len(self._nonneg)):
            cols = col_of_var[vi]
            if len(cols) == 1:
                values.append(x[cols[0]])
            else:
                values.append(x[cols[0]] - x[cols[1]])
        return status, values, value

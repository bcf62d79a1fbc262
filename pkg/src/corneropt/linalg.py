"""Exact integer and rational linear algebra.

Everything here runs on Python's arbitrary-precision integers and
``fractions.Fraction``; there is no floating point anywhere.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .errors import DimensionError, DomainError, SingularMatrixError

RationalMatrix = tuple[tuple[Fraction, ...], ...]


@dataclass(frozen=True)
class IntMatrix:
    """Immutable integer matrix stored row-major."""

    rows: int
    cols: int
    entries: tuple[int, ...]

    def __post_init__(self) -> None:
        if self.rows <= 0 or self.cols <= 0:
            raise DimensionError("matrix dimensions must be positive")
        if len(self.entries) != self.rows * self.cols:
            raise DimensionError(
                f"expected {self.rows * self.cols} entries, got {len(self.entries)}"
            )

    @classmethod
    def from_rows(cls, rows: Sequence[Sequence[int]]) -> "IntMatrix":
        if not rows or not rows[0]:
            raise DimensionError("matrix must have at least one row and column")
        ncols = len(rows[0])
        flat: list[int] = []
        for i, row in enumerate(rows):
            if len(row) != ncols:
                raise DimensionError(f"row {i + 1} has {len(row)} entries, expected {ncols}")
            flat.extend(int(v) for v in row)
        return cls(len(rows), ncols, tuple(flat))

    @classmethod
    def identity(cls, n: int) -> "IntMatrix":
        return cls(n, n, tuple(1 if i == j else 0 for i in range(n) for j in range(n)))

    def at(self, i: int, j: int) -> int:
        return self.entries[i * self.cols + j]

    def row(self, i: int) -> tuple[int, ...]:
        return self.entries[i * self.cols : (i + 1) * self.cols]

    def col(self, j: int) -> tuple[int, ...]:
        return tuple(self.entries[i * self.cols + j] for i in range(self.rows))

    def to_rows(self) -> list[list[int]]:
        return [list(self.row(i)) for i in range(self.rows)]

    def submatrix_cols(self, cols: Sequence[int]) -> "IntMatrix":
        """New matrix from the given 0-based column indices, in the given order."""
        return IntMatrix(
            self.rows,
            len(cols),
            tuple(self.at(i, j) for i in range(self.rows) for j in cols),
        )

    def mul_vec(self, v: Sequence[int]) -> tuple[int, ...]:
        if len(v) != self.cols:
            raise DimensionError(f"vector length {len(v)} does not match {self.cols} columns")
        return tuple(sum(self.at(i, j) * v[j] for j in range(self.cols)) for i in range(self.rows))

    def mul(self, other: "IntMatrix") -> "IntMatrix":
        if self.cols != other.rows:
            raise DimensionError("inner dimensions do not match")
        out = [
            sum(self.at(i, k) * other.at(k, j) for k in range(self.cols))
            for i in range(self.rows)
            for j in range(other.cols)
        ]
        return IntMatrix(self.rows, other.cols, tuple(out))

    @property
    def is_square(self) -> bool:
        return self.rows == self.cols


@dataclass(frozen=True)
class SmithNormalForm:
    """Decomposition s @ a @ t == diag(w) with unimodular s, t.

    The invariant factors ``w`` are positive and form a divisibility chain;
    they are unique, while ``s`` and ``t`` are one valid certificate among many.
    """

    s: IntMatrix
    t: IntMatrix
    w: tuple[int, ...]


def determinant(matrix: IntMatrix) -> int:
    """Exact determinant by Bareiss fraction-free elimination."""
    if not matrix.is_square:
        raise DimensionError("determinant requires a square matrix")
    n = matrix.rows
    a = matrix.to_rows()
    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = a[k][k]
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                # Bareiss update: exact integer division by the previous pivot.
                a[i][j] = (a[i][j] * pivot - a[i][k] * a[k][j]) // prev
            a[i][k] = 0
        prev = pivot
    return sign * a[n - 1][n - 1]


def invert_rational_matrix(matrix: IntMatrix) -> RationalMatrix:
    """Exact inverse of a nonsingular integer matrix, as rows of Fractions."""
    if not matrix.is_square:
        raise DimensionError("inverse requires a square matrix")
    n = matrix.rows
    aug = [
        [Fraction(matrix.at(i, j)) for j in range(n)]
        + [Fraction(1) if j == i else Fraction(0) for j in range(n)]
        for i in range(n)
    ]
    for col in range(n):
        pivot_row = next((i for i in range(col, n) if aug[i][col] != 0), None)
        if pivot_row is None:
            raise SingularMatrixError("matrix is singular")
        if pivot_row != col:
            aug[col], aug[pivot_row] = aug[pivot_row], aug[col]
        pivot = aug[col][col]
        aug[col] = [v / pivot for v in aug[col]]
        for i in range(n):
            if i != col and aug[i][col] != 0:
                factor = aug[i][col]
                aug[i] = [v - factor * p for v, p in zip(aug[i], aug[col])]
    return tuple(tuple(row[n:]) for row in aug)


def _swap_rows(a: list[list[int]], s: list[list[int]], i: int, j: int) -> None:
    a[i], a[j] = a[j], a[i]
    s[i], s[j] = s[j], s[i]


def _swap_cols(a: list[list[int]], t: list[list[int]], i: int, j: int) -> None:
    for row in a:
        row[i], row[j] = row[j], row[i]
    for row in t:
        row[i], row[j] = row[j], row[i]


def _add_row(a: list[list[int]], s: list[list[int]], dst: int, src: int, factor: int) -> None:
    a[dst] = [x + factor * y for x, y in zip(a[dst], a[src])]
    s[dst] = [x + factor * y for x, y in zip(s[dst], s[src])]


def _add_col(a: list[list[int]], t: list[list[int]], dst: int, src: int, factor: int) -> None:
    for row in a:
        row[dst] += factor * row[src]
    for row in t:
        row[dst] += factor * row[src]


def smith_normal_form(matrix: IntMatrix) -> SmithNormalForm:
    """Smith normal form of a nonsingular square integer matrix.

    Classical gcd-driven elimination: repeatedly move the submatrix entry of
    smallest magnitude to the pivot, clear its row and column, and pull any
    divisibility violation into the pivot row.  Negative diagonal entries are
    fixed at the end by column negations, which keeps the row transform free
    of extra sign flips.
    """
    if not matrix.is_square:
        raise DimensionError("Smith normal form requires a square matrix")
    if all(v == 0 for v in matrix.entries):
        raise DomainError("Smith normal form of the zero matrix is not supported")
    n = matrix.rows
    a = matrix.to_rows()
    s = IntMatrix.identity(n).to_rows()
    t = IntMatrix.identity(n).to_rows()

    for k in range(n):
        while True:
            best = None
            pi = pj = -1
            for i in range(k, n):
                for j in range(k, n):
                    v = abs(a[i][j])
                    if v and (best is None or v < best):
                        best, pi, pj = v, i, j
            if best is None:
                raise SingularMatrixError("matrix is singular; no Smith normal form with positive invariant factors")
            if pi != k:
                _swap_rows(a, s, k, pi)
            if pj != k:
                _swap_cols(a, t, k, pj)

            col_clear = True
            for i in range(k + 1, n):
                q = a[i][k] // a[k][k]
                if q:
                    _add_row(a, s, i, k, -q)
                if a[i][k]:
                    col_clear = False
            if not col_clear:
                continue
            row_clear = True
            for j in range(k + 1, n):
                q = a[k][j] // a[k][k]
                if q:
                    _add_col(a, t, j, k, -q)
                if a[k][j]:
                    row_clear = False
            if not row_clear:
                continue

            violation = None
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    if a[i][j] % a[k][k] != 0:
                        violation = i
                        break
                if violation is not None:
                    break
            if violation is None:
                break
            # Pulling the offending row up lets the next sweep gcd-reduce the pivot.
            _add_row(a, s, k, violation, 1)

    for k in range(n):
        if a[k][k] < 0:
            for row in a:
                row[k] = -row[k]
            for row in t:
                row[k] = -row[k]

    w = tuple(a[k][k] for k in range(n))
    return SmithNormalForm(IntMatrix.from_rows(s), IntMatrix.from_rows(t), w)


def canonical_mod(values: Sequence[int], moduli: Sequence[int]) -> tuple[int, ...]:
    """Componentwise canonical residue: result[j] in [0, moduli[j])."""
    if len(values) != len(moduli):
        raise DimensionError(f"vector length {len(values)} does not match {len(moduli)} moduli")
    for m in moduli:
        if m <= 0:
            raise DomainError(f"modulus must be positive, got {m}")
    return tuple(v % m for v, m in zip(values, moduli))

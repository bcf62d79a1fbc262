import random
from fractions import Fraction

import pytest

from corneropt.errors import DimensionError, DomainError, SingularMatrixError
from corneropt.linalg import (
    IntMatrix,
    canonical_mod,
    determinant,
    invert_rational_matrix,
    smith_normal_form,
)


def F(p, q=1):
    return Fraction(p, q)


class TestDeterminant:
    def test_2x2(self):
        assert determinant(IntMatrix.from_rows([[2, 4], [4, 4]])) == -8

    def test_identity(self):
        assert determinant(IntMatrix.identity(3)) == 1

    def test_diagonal(self):
        assert determinant(IntMatrix.from_rows([[6, 0], [0, 4]])) == 24

    def test_singular(self):
        assert determinant(IntMatrix.from_rows([[1, 2], [2, 4]])) == 0

    def test_non_square_rejected(self):
        with pytest.raises(DimensionError):
            determinant(IntMatrix.from_rows([[1, 2, 3], [4, 5, 6]]))

    def test_matches_cofactor_expansion_on_random_matrices(self):
        rng = random.Random(7)
        for _ in range(100):
            n = rng.randint(1, 4)
            m = IntMatrix.from_rows(
                [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            )
            assert determinant(m) == _cofactor_det(m.to_rows())


def _cofactor_det(rows):
    n = len(rows)
    if n == 1:
        return rows[0][0]
    total = 0
    for j in range(n):
        minor = [r[:j] + r[j + 1 :] for r in rows[1:]]
        total += (-1) ** j * rows[0][j] * _cofactor_det(minor)
    return total


class TestInverse:
    def test_2x2(self):
        inv = invert_rational_matrix(IntMatrix.from_rows([[2, 4], [4, 4]]))
        assert inv == (
            (F(-1, 2), F(1, 2)),
            (F(1, 2), F(-1, 4)),
        )

    def test_inverse_applied_to_rhs(self):
        # A_B^{-1} (9, 15) reproduces the relaxation optimum components (3, 3/4).
        inv = invert_rational_matrix(IntMatrix.from_rows([[2, 4], [4, 4]]))
        applied = tuple(sum(row[j] * v for j, v in enumerate((9, 15))) for row in inv)
        assert applied == (F(3), F(3, 4))

    def test_identity(self):
        assert invert_rational_matrix(IntMatrix.identity(4)) == tuple(
            tuple(F(1) if i == j else F(0) for j in range(4)) for i in range(4)
        )

    def test_diagonal(self):
        assert invert_rational_matrix(IntMatrix.from_rows([[2, 0], [0, 4]])) == (
            (F(1, 2), F(0)),
            (F(0), F(1, 4)),
        )

    def test_singular_rejected(self):
        with pytest.raises(SingularMatrixError):
            invert_rational_matrix(IntMatrix.from_rows([[1, 2], [2, 4]]))

    def test_multiply_back_gives_identity(self):
        rng = random.Random(11)
        checked = 0
        while checked < 50:
            n = rng.randint(1, 5)
            m = IntMatrix.from_rows(
                [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            )
            if determinant(m) == 0:
                continue
            inv = invert_rational_matrix(m)
            for i in range(n):
                for j in range(n):
                    acc = sum(m.at(i, k) * inv[k][j] for k in range(n))
                    assert acc == (1 if i == j else 0)
            checked += 1


def _snf_invariants_hold(m, snf):
    n = m.rows
    # s @ m @ t == diag(w), exactly
    product = snf.s.mul(m).mul(snf.t)
    for i in range(n):
        for j in range(n):
            expected = snf.w[i] if i == j else 0
            assert product.at(i, j) == expected
    assert abs(determinant(snf.s)) == 1
    assert abs(determinant(snf.t)) == 1
    assert all(x > 0 for x in snf.w)
    for i in range(n - 1):
        assert snf.w[i + 1] % snf.w[i] == 0
    prod = 1
    for x in snf.w:
        prod *= x
    assert prod == abs(determinant(m))


class TestSmithNormalForm:
    def test_example_basis_matrix(self):
        m = IntMatrix.from_rows([[2, 4], [4, 4]])
        snf = smith_normal_form(m)
        assert snf.w == (2, 4)
        _snf_invariants_hold(m, snf)

    def test_identity(self):
        snf = smith_normal_form(IntMatrix.identity(3))
        assert snf.w == (1, 1, 1)
        _snf_invariants_hold(IntMatrix.identity(3), snf)

    def test_diagonal_with_gcd_reduction(self):
        m = IntMatrix.from_rows([[6, 0], [0, 4]])
        snf = smith_normal_form(m)
        assert snf.w == (2, 12)
        _snf_invariants_hold(m, snf)

    def test_zero_matrix_rejected(self):
        with pytest.raises(DomainError):
            smith_normal_form(IntMatrix.from_rows([[0, 0], [0, 0]]))

    def test_singular_rejected(self):
        with pytest.raises(SingularMatrixError):
            smith_normal_form(IntMatrix.from_rows([[1, 2], [2, 4]]))

    def test_invariants_on_random_matrices(self):
        rng = random.Random(3)
        checked = 0
        while checked < 200:
            n = rng.randint(1, 5)
            m = IntMatrix.from_rows(
                [[rng.randint(-9, 9) for _ in range(n)] for _ in range(n)]
            )
            if determinant(m) == 0:
                continue
            _snf_invariants_hold(m, smith_normal_form(m))
            checked += 1


class TestCanonicalMod:
    def test_example_rhs(self):
        assert canonical_mod((9, -15), (2, 4)) == (1, 1)

    def test_zero(self):
        assert canonical_mod((0, 0), (2, 4)) == (0, 0)

    def test_negative_ones(self):
        assert canonical_mod((-1, -1), (2, 4)) == (1, 3)

    def test_nonpositive_modulus_rejected(self):
        with pytest.raises(DomainError):
            canonical_mod((1, 2), (2, 0))

    def test_length_mismatch_rejected(self):
        with pytest.raises(DimensionError):
            canonical_mod((1, 2, 3), (2, 4))

    def test_idempotent(self):
        rng = random.Random(5)
        for _ in range(100):
            k = rng.randint(1, 6)
            w = tuple(rng.randint(1, 9) for _ in range(k))
            v = tuple(rng.randint(-50, 50) for _ in range(k))
            once = canonical_mod(v, w)
            assert canonical_mod(once, w) == once
            assert all(0 <= r < m for r, m in zip(once, w))
            assert all((r - x) % m == 0 for r, x, m in zip(once, v, w))

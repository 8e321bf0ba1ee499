from fractions import Fraction

import numpy as np
import pytest
from numpy.testing import assert_allclose

from circkr import (
    Factorization,
    SizeGuardError,
    SystemSpec,
    TRIDIAGONAL,
    VariantMismatchError,
    build_dense,
    decompose,
    decompose_tridiagonal,
    inverse_dense,
    inverse_first_row,
    spectral_inverse_first_row,
)

from grids import relative_max_error

SPOT_CHECKS = [
    (3, 2.05, 1.0),
    (4, -2.5, -0.5),
    (5, 2.5, 2.0),
    (8, 5.0, 3.0),
    (16, -2.05, 1.0),
    (64, 100.0, -0.5),
    (200, -2.5, 1.0),
]


def _spec(n, d, a):
    return SystemSpec(n, d * a, a)


def _exact_inverse_first_row(n, c, a):
    """Rational-arithmetic elimination oracle, independent of everything."""
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for i in range(n):
        matrix[i][i] = Fraction(c)
        matrix[i][(i + 1) % n] = Fraction(a)
        matrix[i][(i - 1) % n] = Fraction(a)
    rhs = [Fraction(1)] + [Fraction(0)] * (n - 1)
    for col in range(n):
        pivot_row = max(range(col, n), key=lambda r: abs(matrix[r][col]))
        matrix[col], matrix[pivot_row] = matrix[pivot_row], matrix[col]
        rhs[col], rhs[pivot_row] = rhs[pivot_row], rhs[col]
        for row in range(col + 1, n):
            factor = matrix[row][col] / matrix[col][col]
            if factor == 0:
                continue
            for k in range(col, n):
                matrix[row][k] -= factor * matrix[col][k]
            rhs[row] -= factor * rhs[col]
    x = [Fraction(0)] * n
    for row in range(n - 1, -1, -1):
        acc = rhs[row] - sum(matrix[row][k] * x[k] for k in range(row + 1, n))
        x[row] = acc / matrix[row][row]
    return x


class TestFirstRow:
    def test_fixture_exact_fractions(self):
        row = inverse_first_row(decompose(SystemSpec(5, 5.0, 2.0)))
        exact = [31 / 99, -14 / 99, 4 / 99, 4 / 99, -14 / 99]
        assert_allclose(row, exact, rtol=1e-12, atol=0)
        assert_allclose(
            row, [0.313131, -0.141414, 0.040404, 0.040404, -0.141414], atol=1e-5
        )

    @pytest.mark.parametrize("n, c, a", [(4, 10, 1), (6, 7, 2), (7, -9, 3), (11, 23, -4)])
    def test_matches_rational_elimination(self, n, c, a):
        row = inverse_first_row(decompose(SystemSpec(n, float(c), float(a))))
        exact = np.array(
            [float(v) for v in _exact_inverse_first_row(n, c, a)]
        )
        assert np.abs(row - exact).max() <= 1e-13 * np.abs(exact).max()

    @pytest.mark.parametrize("n, d, a", SPOT_CHECKS)
    def test_matches_spectral_oracle(self, n, d, a):
        spec = _spec(n, d, a)
        row = inverse_first_row(decompose(spec))
        reference = spectral_inverse_first_row(spec)
        scale = np.abs(row).max()
        assert np.abs(row - reference).max() <= 1e-9 * scale

    @pytest.mark.parametrize("n, d, a", SPOT_CHECKS)
    def test_palindrome_symmetry(self, n, d, a):
        # Row 1 of the inverse of a symmetric circulant satisfies
        # v_j = v_{n+2-j} (1-based), i.e. v[1:] reversed equals itself.
        row = inverse_first_row(decompose(_spec(n, d, a)))
        scale = np.abs(row).max()
        assert np.abs(row[1:] - row[1:][::-1]).max() <= 1e-12 * scale

    def test_rejects_tridiagonal(self):
        fct = decompose_tridiagonal(SystemSpec(5, 5.0, 2.0))
        with pytest.raises(VariantMismatchError):
            inverse_first_row(fct)


class TestInverseDense:
    def test_diagonal_fixture(self):
        # n = 4, c = 10, a = 1: every diagonal entry is exactly 49/480.
        inv = inverse_dense(decompose(SystemSpec(4, 10.0, 1.0)))
        assert_allclose(np.diag(inv), np.full(4, 49 / 480), rtol=1e-13)

    @pytest.mark.parametrize("n, d, a", SPOT_CHECKS)
    def test_left_and_right_identity_circulant(self, n, d, a):
        spec = _spec(n, d, a)
        inv = inverse_dense(decompose(spec))
        dense = build_dense(spec)
        identity = np.eye(n)
        assert np.abs(inv @ dense - identity).max() <= 1e-10
        assert np.abs(dense @ inv - identity).max() <= 1e-10

    @pytest.mark.parametrize("n, d, a", SPOT_CHECKS)
    def test_identity_tridiagonal(self, n, d, a):
        spec = _spec(n, d, a)
        inv = inverse_dense(decompose_tridiagonal(spec))
        dense = build_dense(spec, variant=TRIDIAGONAL)
        assert np.abs(inv @ dense - np.eye(n)).max() <= 1e-10

    def test_symmetry_bound(self):
        inv = inverse_dense(decompose(SystemSpec(64, -4.7, 1.5)))
        assert np.abs(inv - inv.T).max() <= 1e-13 * np.abs(inv).max()

    def test_first_row_consistency(self):
        spec = SystemSpec(24, 13.0, 5.0)
        fct = decompose(spec)
        inv = inverse_dense(fct)
        row = inverse_first_row(fct)
        assert np.abs(inv[0] - row).max() <= 1e-12 * np.abs(row).max()

    def test_circulant_inverse_is_circulant(self):
        spec = SystemSpec(17, -5.5, 2.0)
        inv = inverse_dense(decompose(spec))
        scale = np.abs(inv).max()
        for shift in (1, 5):
            rolled = np.roll(np.roll(inv, shift, axis=0), shift, axis=1)
            assert np.abs(inv - rolled).max() <= 1e-12 * scale

    def test_matches_solve_columns(self):
        spec = SystemSpec(10, 2.9, -1.0)
        fct = decompose(spec)
        inv = inverse_dense(fct)
        dense = build_dense(spec)
        reference = np.linalg.solve(dense, np.eye(10))
        assert relative_max_error(inv, reference) <= 1e-12

    def test_steep_decay_handled_without_underflow_artifacts(self):
        # Entries decay geometrically away from the diagonal; at n = 200 and
        # |d| = 5 the far corners sit 130+ orders of magnitude below the
        # diagonal and must still be finite and symmetric.
        spec = SystemSpec(200, -10.0, 2.0)
        inv = inverse_dense(decompose(spec))
        assert np.isfinite(inv).all()
        dense = build_dense(spec)
        assert np.abs(inv @ dense - np.eye(200)).max() <= 1e-10

    def test_size_guard(self):
        n = 10_001
        fake = Factorization(
            SystemSpec(n, 5.0, 2.0), np.ones(n + 2), np.ones(n - 1), 1.0
        )
        with pytest.raises(SizeGuardError):
            inverse_dense(fake)

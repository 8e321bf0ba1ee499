import numpy as np
import pytest
from numpy.testing import assert_allclose, assert_array_equal

from circkr import (
    DimensionMismatchError,
    SingularEigenvalueError,
    SingularMatrixError,
    SizeGuardError,
    SystemSpec,
    build_dense,
    dense_solve,
    spectral_inverse_entry,
    spectral_inverse_first_row,
)


class TestBuildDense:
    def test_circulant_layout(self):
        dense = build_dense(SystemSpec(4, 10.0, 1.0))
        assert_array_equal(
            dense,
            [
                [10.0, 1.0, 0.0, 1.0],
                [1.0, 10.0, 1.0, 0.0],
                [0.0, 1.0, 10.0, 1.0],
                [1.0, 0.0, 1.0, 10.0],
            ],
        )

    def test_tridiagonal_layout(self):
        dense = build_dense(SystemSpec(4, 10.0, 1.0), variant="tridiagonal")
        assert dense[0, 3] == 0.0 and dense[3, 0] == 0.0
        assert_array_equal(np.diag(dense), np.full(4, 10.0))
        assert_array_equal(np.diag(dense, 1), np.full(3, 1.0))

    def test_minimal_order_corners_overlay(self):
        # At n = 3 the corner entries coincide with the outer off-diagonal
        # positions of a full matrix; both orientations must carry a once.
        dense = build_dense(SystemSpec(3, 9.0, 2.0))
        assert_array_equal(
            dense, [[9.0, 2.0, 2.0], [2.0, 9.0, 2.0], [2.0, 2.0, 9.0]]
        )

    def test_rejects_unknown_variant(self):
        with pytest.raises(ValueError):
            build_dense(SystemSpec(4, 10.0, 1.0), variant="banded")

    def test_size_guard(self):
        with pytest.raises(SizeGuardError):
            build_dense(SystemSpec(10_001, 5.0, 2.0))


class TestDenseSolve:
    def test_known_small_system(self):
        matrix = np.array([[2.0, 1.0], [1.0, 3.0]])
        assert_allclose(dense_solve(matrix, np.array([3.0, 4.0])), [1.0, 1.0])

    def test_pivoting_handles_zero_leading_entry(self):
        matrix = np.array([[0.0, 1.0], [1.0, 0.0]])
        assert_allclose(dense_solve(matrix, np.array([5.0, 7.0])), [7.0, 5.0])

    @pytest.mark.parametrize("n", [3, 7, 25, 80])
    def test_matches_numpy_on_random_systems(self, n):
        rng = np.random.default_rng(n)
        matrix = rng.standard_normal((n, n)) + n * np.eye(n)
        b = rng.standard_normal(n)
        assert_allclose(
            dense_solve(matrix, b), np.linalg.solve(matrix, b), rtol=1e-10, atol=1e-12
        )

    def test_block_right_hand_side(self):
        rng = np.random.default_rng(99)
        matrix = rng.standard_normal((12, 12)) + 12 * np.eye(12)
        block = rng.standard_normal((12, 4))
        got = dense_solve(matrix, block)
        assert got.shape == (12, 4)
        assert_allclose(got, np.linalg.solve(matrix, block), rtol=1e-10, atol=1e-12)

    def test_singular_matrix_raises(self):
        matrix = np.ones((3, 3))
        with pytest.raises(SingularMatrixError, match="column"):
            dense_solve(matrix, np.ones(3))

    def test_shape_validation(self):
        with pytest.raises(DimensionMismatchError):
            dense_solve(np.ones((3, 4)), np.ones(3))
        with pytest.raises(DimensionMismatchError):
            dense_solve(np.eye(3), np.ones(4))

    def test_does_not_mutate_inputs(self):
        matrix = np.array([[4.0, 1.0], [1.0, 4.0]])
        b = np.array([1.0, 2.0])
        snapshot_m, snapshot_b = matrix.copy(), b.copy()
        dense_solve(matrix, b)
        assert_array_equal(matrix, snapshot_m)
        assert_array_equal(b, snapshot_b)


class TestSpectral:
    def test_fixture_first_row(self):
        spec = SystemSpec(5, 5.0, 2.0)
        row = spectral_inverse_first_row(spec)
        assert_allclose(
            row, [31 / 99, -14 / 99, 4 / 99, 4 / 99, -14 / 99], rtol=0, atol=1e-14
        )

    def test_entry_matches_row(self):
        spec = SystemSpec(9, -7.0, 2.5)
        row = spectral_inverse_first_row(spec)
        for k in range(9):
            assert spectral_inverse_entry(spec, k) == pytest.approx(
                row[k], rel=0, abs=1e-15
            )

    def test_matches_dense_inverse(self):
        spec = SystemSpec(16, 6.0, -2.0)
        reference = np.linalg.inv(build_dense(spec))[0]
        row = spectral_inverse_first_row(spec)
        assert np.abs(row - reference).max() <= 1e-13 * np.abs(reference).max()

    def test_entry_offset_validation(self):
        spec = SystemSpec(5, 5.0, 2.0)
        with pytest.raises(ValueError):
            spectral_inverse_entry(spec, -1)
        with pytest.raises(ValueError):
            spectral_inverse_entry(spec, 5)

    def test_singular_eigenvalue_detected(self):
        # c = -2a makes the j = 0 eigenvalue exactly zero.
        spec = SystemSpec(6, -2.0, 1.0, strict=False)
        with pytest.raises(SingularEigenvalueError):
            spectral_inverse_first_row(spec)
        with pytest.raises(SingularEigenvalueError):
            spectral_inverse_entry(spec, 0)

    def test_size_guard(self):
        with pytest.raises(SizeGuardError):
            spectral_inverse_first_row(SystemSpec(10_001, 5.0, 2.0))

"""O(n) direct solve against a factorized system.

Forward pass: y = R K (b / a) costs two structured sweeps.  Backward pass:
the transposed core A1^T is upper triangular with three nonzero bands
(diagonal, superdiagonal, last column), so back substitution is a single
scan.  For the circulant variant the unknowns come out as

    x_n = y_n / g
    x_{n-1} = (y_{n-1} - (f_{n-1} + 1) x_n) / (-f_n)
    x_i = (y_i - f_i x_{i+1} - x_n) / (-f_{i+1})        i = n-2 .. 1

and the tridiagonal variant uses the pure bidiagonal core (last pivot
-f_{n+1}, no x_n coupling term).
"""

import contextlib

import numpy as np

from .errors import (
    CircKRError,
    DimensionMismatchError,
    GrowthOverflowError,
    SingularPivotError,
)
from .factors import CIRCULANT, Factorization, _check_vector


class OperationCounter:
    """Accumulates the scalar-arithmetic work a solve actually performs."""

    def __init__(self):
        self.total = 0

    def add(self, amount):
        self.total += int(amount)


_counter = None


@contextlib.contextmanager
def count_operations():
    """Context manager instrumenting solve() calls made inside it.

    Yields an OperationCounter whose ``total`` grows with every vector
    sweep (by its length) and every back-substitution step.  Used to check
    that the solve does O(n) work.
    """
    global _counter
    previous = _counter
    _counter = counter = OperationCounter()
    try:
        yield counter
    finally:
        _counter = previous


def _tally(amount):
    if _counter is not None:
        _counter.add(amount)


def solve(fct: Factorization, b) -> np.ndarray:
    """Solve A x = b for one right-hand side in O(n).

    The right-hand side must be finite everywhere; NaN or infinity is
    rejected eagerly rather than silently propagated.
    """
    b = _check_vector(fct, b, name="b")
    if not np.isfinite(b).all():
        bad = int(np.nonzero(~np.isfinite(b))[0][0])
        raise GrowthOverflowError(
            f"right-hand side entry {bad + 1} is not finite ({b[bad]})"
        )
    n = fct.spec.n
    f = fct.f
    scaled = b / fct.spec.a
    y = np.cumsum(f[1 : n + 1] * scaled)
    _tally(3 * n)
    if not np.isfinite(y[-1]):
        raise GrowthOverflowError("prefix accumulation left the 64-bit range")
    x = np.empty(n)
    if fct.variant == CIRCULANT:
        g = fct.g
        if g == 0.0:
            raise SingularPivotError("closure scalar g = 0: the matrix is singular")
        y_last = float(fct.r @ y[: n - 1]) + y[n - 1]
        _tally(2 * n)
        x_n = y_last / g
        x[n - 1] = x_n
        x[n - 2] = (y[n - 2] - (f[n - 1] + 1.0) * x_n) / (-f[n])
        for i in range(n - 3, -1, -1):
            x[i] = (y[i] - f[i + 1] * x[i + 1] - x_n) / (-f[i + 2])
        _tally(5 * (n - 2))
    else:
        x[n - 1] = y[n - 1] / (-f[n + 1])
        for i in range(n - 2, -1, -1):
            x[i] = (y[i] - f[i + 1] * x[i + 1]) / (-f[i + 2])
        _tally(4 * (n - 1))
    if not np.isfinite(x).all():
        raise GrowthOverflowError("back substitution left the 64-bit range")
    return x


def solve_many(fct: Factorization, block) -> np.ndarray:
    """Solve one factorization against every column of ``block``.

    Returns an (n, k) array; k = 0 returns an empty solution block
    immediately.  A failure on any column re-raises the same structured
    error with the offending column named.  Columns are independent, so
    callers may freely split them across workers; this implementation
    keeps them sequential for determinism.
    """
    block = np.asarray(block, dtype=float)
    n = fct.spec.n
    if block.ndim != 2 or block.shape[0] != n:
        raise DimensionMismatchError(
            f"right-hand side block must have shape ({n}, k), got {block.shape}"
        )
    out = np.empty_like(block)
    for j in range(block.shape[1]):
        try:
            out[:, j] = solve(fct, block[:, j])
        except CircKRError as err:
            wrapped = type(err)(f"right-hand side column {j + 1}: {err.detail}")
            wrapped.__dict__.update(err.__dict__)
            wrapped.detail = f"right-hand side column {j + 1}: {err.detail}"
            raise wrapped from None
    return out

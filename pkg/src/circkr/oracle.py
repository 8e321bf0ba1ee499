"""Reference implementations used to cross-check the structured paths.

Everything here is deliberately independent of the factorization modules:
dense assembly writes the matrix entries directly from the system
description, the dense solver is plain partial-pivoting Gaussian
elimination, and the spectral route evaluates the circulant eigenvalue
formula.  Tests compare these references against the O(n) machinery; a
substitution of either side alone must keep the cross-check meaningful.
"""

import numpy as np

from .errors import (
    DimensionMismatchError,
    SingularEigenvalueError,
    SingularMatrixError,
    SizeGuardError,
)

# Same dense cap as the factor side, restated here so the reference path
# does not depend on it.
DENSE_ORDER_LIMIT = 10_000


def build_dense(spec, variant="circulant"):
    """Dense matrix for ``spec``: diagonal c, off-diagonals a, and, for the
    circulant variant, the two corner entries a."""
    n = spec.n
    if n > DENSE_ORDER_LIMIT:
        raise SizeGuardError(
            f"dense assembly is capped at order {DENSE_ORDER_LIMIT}, got n = {n}"
        )
    if variant not in ("circulant", "tridiagonal"):
        raise ValueError(f"unknown variant {variant!r}")
    out = np.zeros((n, n))
    np.fill_diagonal(out, spec.c)
    steps = np.arange(n - 1)
    out[steps, steps + 1] = spec.a
    out[steps + 1, steps] = spec.a
    if variant == "circulant":
        out[0, n - 1] = spec.a
        out[n - 1, 0] = spec.a
    return out


def dense_solve(matrix, rhs):
    """Gaussian elimination with partial pivoting, the dense reference solve.

    Accepts a single right-hand side (length n) or a block (n, k) and
    returns the solution in the same shape.  Raises SingularMatrixError
    when the best remaining pivot is numerically zero.
    """
    work = np.array(matrix, dtype=float)
    if work.ndim != 2 or work.shape[0] != work.shape[1]:
        raise DimensionMismatchError(f"matrix must be square, got shape {work.shape}")
    n = work.shape[0]
    b = np.asarray(rhs, dtype=float)
    single = b.ndim == 1
    if single:
        b = b[:, None]
    if b.ndim != 2 or b.shape[0] != n:
        raise DimensionMismatchError(
            f"right-hand side must have leading dimension {n}, got shape {b.shape}"
        )
    b = b.copy()
    pivot_floor = n * np.finfo(float).eps * max(np.abs(work).max(), np.finfo(float).tiny)
    for k in range(n):
        lead = k + int(np.argmax(np.abs(work[k:, k])))
        if abs(work[lead, k]) <= pivot_floor:
            raise SingularMatrixError(
                f"zero pivot in column {k + 1} after partial pivoting"
            )
        if lead != k:
            work[[k, lead]] = work[[lead, k]]
            b[[k, lead]] = b[[lead, k]]
        factors = work[k + 1 :, k] / work[k, k]
        work[k + 1 :, k:] -= np.outer(factors, work[k, k:])
        b[k + 1 :] -= np.outer(factors, b[k])
    x = np.empty_like(b)
    for k in range(n - 1, -1, -1):
        x[k] = (b[k] - work[k, k + 1 :] @ x[k + 1 :]) / work[k, k]
    return x[:, 0] if single else x


def _eigenvalues(spec):
    angles = 2.0 * np.pi * np.arange(spec.n) / spec.n
    lam = spec.c + 2.0 * spec.a * np.cos(angles)
    floor = 1e-14 * (abs(spec.c) + 2.0 * abs(spec.a))
    small = np.abs(lam) <= floor
    if small.any():
        j = int(np.nonzero(small)[0][0])
        raise SingularEigenvalueError(
            f"circulant eigenvalue {j} is numerically zero ({lam[j]})"
        )
    return angles, lam


def spectral_inverse_entry(spec, k):
    """Entry (1, 1+k) of the circulant inverse by the eigenvalue sum.

    (A^-1)_{1,1+k} = (1/n) * sum_j cos(2 pi j k / n) / (c + 2 a cos(2 pi j / n)),
    meaningful for the circulant variant only.
    """
    n = spec.n
    if not 0 <= k < n:
        raise ValueError(f"offset k must lie in [0, {n - 1}], got {k}")
    angles, lam = _eigenvalues(spec)
    return float(np.mean(np.cos(angles * k) / lam))


def spectral_inverse_first_row(spec):
    """All n first-row entries of the circulant inverse, by the same sum."""
    if spec.n > DENSE_ORDER_LIMIT:
        raise SizeGuardError(
            f"spectral row evaluation is capped at order {DENSE_ORDER_LIMIT}, "
            f"got n = {spec.n}"
        )
    angles, lam = _eigenvalues(spec)
    inv = 1.0 / lam
    return np.array([np.mean(np.cos(angles * k) * inv) for k in range(spec.n)])

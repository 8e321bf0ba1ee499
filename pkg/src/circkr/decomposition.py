"""Factorize a system description and rebuild the dense matrix from it.

The circulant variant satisfies  A = a * K^-1 * R^-1 * A1^T  and the
tridiagonal variant drops R entirely:  A = a * K^-1 * A1^T  with the
bidiagonal core.  Factor storage is O(n); only reconstruction is dense.
"""

import numpy as np

from .errors import GrowthOverflowError
from .factors import (
    CIRCULANT,
    TRIDIAGONAL,
    Factorization,
    _guard_dense,
    materialize,
)
from .recurrence import SystemSpec, compute_g, generate_f, generate_r


def _f_for_order(spec):
    # The core factor's last diagonal (tridiagonal) and the closure scalar
    # (circulant) both need f_{n+1}, so generation always runs to n + 1.
    try:
        return generate_f(spec, spec.n + 1)
    except GrowthOverflowError as err:
        max_safe_n = err.max_safe_m - 1
        raise GrowthOverflowError(
            f"order n = {spec.n} needs f_0..f_{spec.n + 1}, but f_{err.failing_index} "
            f"exceeds the 64-bit range for d = {spec.d}; max safe n = {max_safe_n}",
            failing_index=err.failing_index,
            growth_ratio=err.growth_ratio,
            max_safe_n=max_safe_n,
        ) from None


def decompose(spec: SystemSpec) -> Factorization:
    """Factorize the circulant variant of ``spec`` in O(n) time and storage."""
    f = _f_for_order(spec)
    r = generate_r(f, spec.n)
    g = compute_g(f, r, spec.n)
    return Factorization(spec=spec, f=f, r=r, g=g, variant=CIRCULANT)


def decompose_tridiagonal(spec: SystemSpec) -> Factorization:
    """Factorize the plain tridiagonal variant (no corners, R = I)."""
    f = _f_for_order(spec)
    return Factorization(spec=spec, f=f, r=np.empty(0), g=None, variant=TRIDIAGONAL)


def reconstruct(fct: Factorization) -> np.ndarray:
    """Rebuild the dense matrix from its factors (verification path).

    Applies R^-1 (one rank-one row update) and K^-1 (a first-difference
    sweep) to A1^T row by row, then scales by a: O(n^2) after the core
    factor is materialized.  Capped at order 10**4.
    """
    n = fct.spec.n
    _guard_dense(n)
    f = fct.f
    upper = np.ascontiguousarray(materialize(fct, "A1").T)
    if fct.variant == CIRCULANT:
        upper[n - 1] = upper[n - 1] - fct.r @ upper[: n - 1]
    out = np.empty_like(upper)
    out[0] = upper[0] / f[1]
    out[1:] = (upper[1:] - upper[:-1]) / f[2 : n + 1][:, None]
    out *= fct.spec.a
    return out

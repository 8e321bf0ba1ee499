"""Dense and first-row inverses assembled from the structured factors.

The inverse satisfies  A^-1 = (1/a) * (A1^-1)^T * R * K.  Both operands are
structured: (A1^-1)^T is upper triangular with the closed-form block
-f_j / (f_i f_{i+1}) plus one substitution row, and R K is K with its last
row replaced by a combination of the earlier rows.  Every entry of the
product therefore collapses to a suffix sum, giving the whole dense inverse
in O(n^2) without a general matrix multiply.
"""

import numpy as np

from .errors import VariantMismatchError
from .factors import CIRCULANT, Factorization, _guard_dense, a1_inverse_last_row
from .solver import solve

# Asymmetry above this (relative to the largest entry) triggers averaging.
SYMMETRY_RTOL = 1e-13


def inverse_dense(fct: Factorization) -> np.ndarray:
    """Full inverse in O(n^2), symmetric by construction up to roundoff.

    Writing G_m = f_m * sum_{k=m}^{n-1} 1/(f_k f_{k+1}) (computed by the
    stable downward recursion G_m = 1/f_{m+1} + (f_m/f_{m+1}) G_{m+1} so
    that no intermediate product can overflow or underflow), the entries
    of a * A^-1 are

        -f_min(i,j) * G_max(i,j)                 closed-form block
        + m_i * w_j                              (circulant correction)

    with m the substitution row of A1^-1 and w_j = f_j (1 + suffix sum of
    r).  The tridiagonal variant keeps only the closed-form block, with
    the suffix running through k = n.  Capped at order 10**4.  If roundoff
    asymmetry exceeds 1e-13 relative, the result is symmetrized by
    averaging.
    """
    n = fct.spec.n
    _guard_dense(n)
    f = fct.f
    last = n - 1 if fct.variant == CIRCULANT else n
    suffix = np.zeros(n + 2)
    for m in range(last, 0, -1):
        suffix[m] = 1.0 / f[m + 1] + (f[m] / f[m + 1]) * suffix[m + 1]
    fi = f[1 : n + 1]
    idx = np.arange(n)
    lo = np.minimum.outer(idx, idx)
    hi = np.maximum.outer(idx, idx)
    out = -fi[lo] * suffix[hi + 1]
    if fct.variant == CIRCULANT:
        tail = np.zeros(n)
        tail[: n - 1] = np.cumsum(fct.r[::-1])[::-1]
        weights = fi * (1.0 + tail)
        out += np.outer(a1_inverse_last_row(fct), weights)
    out /= fct.spec.a
    scale = np.abs(out).max()
    if scale > 0.0 and np.abs(out - out.T).max() > SYMMETRY_RTOL * scale:
        out = (out + out.T) / 2.0
    return out


def inverse_first_row(fct: Factorization) -> np.ndarray:
    """First row of the inverse in O(n), circulant variant only.

    One structured solve against the first unit vector.  Because the
    inverse of a symmetric circulant matrix is again symmetric circulant,
    this row generates the whole inverse by cyclic shifts and satisfies
    the palindrome property v_j = v_{n+2-j}.
    """
    if fct.variant != CIRCULANT:
        raise VariantMismatchError(
            "the first-row shortcut relies on circulant structure; "
            "use inverse_dense for the tridiagonal variant"
        )
    e1 = np.zeros(fct.spec.n)
    e1[0] = 1.0
    return solve(fct, e1)

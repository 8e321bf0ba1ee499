"""Scalar recurrence driving the circulant tridiagonal factorization.

A symmetric circulant tridiagonal matrix is fixed by three numbers: the
order ``n``, the diagonal value ``c``, and the off-diagonal/corner value
``a``.  Everything structural about its triangular factorization depends
only on the normalized ratio ``d = c / a`` through one sequence::

    f_0 = 0,   f_1 = 1,   f_{i+1} = -d * f_i - f_{i-1}

For ``|d| > 2`` (the strictly diagonally dominant case) the sequence grows
geometrically with per-step ratio ``(|d| + sqrt(d^2 - 4)) / 2``, so the
generator checks every step for 64-bit range exhaustion and reports the
largest usable index instead of letting infinities propagate downstream.

From ``f`` two recurrence-level quantities follow: the corner coupling
coefficients ``r_j = f_n * f_1 / (f_{j+1} * f_j)`` and the closure scalar
``g``, the final pivot of the triangular core factor.
"""

import math
import operator
from dataclasses import dataclass

import numpy as np

from .errors import (
    DimensionMismatchError,
    GrowthOverflowError,
    InconsistencyError,
    InvalidSpecError,
    SingularPivotError,
    ZeroPivotError,
)

# Two algebraically identical evaluations of g must agree this tightly.
G_AGREEMENT_RTOL = 1e-12


@dataclass(frozen=True)
class SystemSpec:
    """Description of one symmetric circulant (or plain) tridiagonal system.

    Parameters
    ----------
    n : int
        Matrix order, at least 3 (the smallest order where the circulant
        tridiagonal pattern is well formed).
    c : float
        Diagonal value.
    a : float
        Off-diagonal value, also placed in the (1, n) and (n, 1) corners
        for the circulant variant.  Must be nonzero.
    strict : bool, optional
        When True (default), require strict diagonal dominance
        ``|c| > 2 |a|``, which guarantees nonsingularity and geometric
        growth of the recurrence.  Permissive construction
        (``strict=False``) relaxes only this bound; the factorization then
        proceeds at the caller's risk and fails with a structured error as
        soon as a pivot degenerates.

    Raises
    ------
    InvalidSpecError
        If any precondition fails.
    """

    n: int
    c: float
    a: float
    strict: bool = True

    def __post_init__(self):
        try:
            n = operator.index(self.n)
        except TypeError:
            raise InvalidSpecError(f"order n must be an integer, got {self.n!r}") from None
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "c", float(self.c))
        object.__setattr__(self, "a", float(self.a))
        object.__setattr__(self, "strict", bool(self.strict))
        if self.n < 3:
            raise InvalidSpecError(f"order n must be at least 3, got {self.n}")
        if not (math.isfinite(self.c) and math.isfinite(self.a)):
            raise InvalidSpecError(f"c and a must be finite, got c = {self.c}, a = {self.a}")
        if self.a == 0.0:
            raise InvalidSpecError("off-diagonal value a must be nonzero")
        if self.strict and not (abs(self.c) > 2.0 * abs(self.a)):
            raise InvalidSpecError(
                f"strict diagonal dominance requires |c| > 2|a|; "
                f"got |{self.c}| <= 2*|{self.a}| (d = {self.c / self.a})"
            )

    @property
    def d(self):
        """Normalized diagonal ratio c / a."""
        return self.c / self.a


def growth_ratio(d):
    """Asymptotic per-step growth factor of |f_i| for ratio ``d``.

    Equals ``(|d| + sqrt(d^2 - 4)) / 2`` when ``|d| > 2``; below that the
    sequence does not grow geometrically and the value is not meaningful.
    """
    d = float(d)
    return (abs(d) + math.sqrt(max(d * d - 4.0, 0.0))) / 2.0


def generate_f(source, m):
    """Generate the recurrence values ``f_0 .. f_m``.

    Parameters
    ----------
    source : SystemSpec or float
        Either a full system description (its ``d`` is used) or the
        normalized ratio directly.
    m : int
        Largest index to generate, at least 1.

    Returns
    -------
    numpy.ndarray
        Vector of length ``m + 1`` with ``out[i] = f_i``.  Generation is
        deterministic: identical inputs give bit-identical outputs.

    Raises
    ------
    GrowthOverflowError
        If some ``f_i`` leaves the finite 64-bit range.  The error carries
        ``failing_index``, the asymptotic ``growth_ratio``, and
        ``max_safe_m`` (the largest index that is still finite), and never
        returns a vector containing non-finite values.
    ZeroPivotError
        If some ``f_i`` with ``i >= 1`` is exactly zero, which can happen
        only for permissive ratios ``|d| <= 2``.  Zero entries would later
        be used as divisors, so generation refuses eagerly.

    Examples
    --------
    >>> generate_f(2.5, 6)
    array([  0.     ,   1.     ,  -2.5    ,   5.25   , -10.625  ,
            21.3125 , -42.65625])
    """
    d = source.d if isinstance(source, SystemSpec) else float(source)
    if not math.isfinite(d):
        raise InvalidSpecError(f"ratio d must be finite, got {d}")
    m = operator.index(m)
    if m < 1:
        raise InvalidSpecError(f"sequence length m must be at least 1, got {m}")
    out = np.empty(m + 1)
    out[0] = 0.0
    out[1] = 1.0
    prev = 0.0
    cur = 1.0
    for i in range(1, m):
        try:
            nxt = -d * cur - prev
        except OverflowError:
            nxt = math.inf
        if not math.isfinite(nxt):
            raise GrowthOverflowError(
                f"f_{i + 1} exceeds the 64-bit range for d = {d} "
                f"(growth ratio {growth_ratio(d):.6g} per step); "
                f"the largest finite index is {i}",
                failing_index=i + 1,
                growth_ratio=growth_ratio(d),
                max_safe_m=i,
            )
        if nxt == 0.0:
            raise ZeroPivotError(
                f"f_{i + 1} = 0 for d = {d}; the factorization needs every "
                f"f_i with i >= 1 as a nonzero pivot",
                index=i + 1,
            )
        out[i + 1] = nxt
        prev, cur = cur, nxt
    return out


def generate_r(f, n):
    """Corner coupling coefficients ``r_1 .. r_{n-1}`` for order ``n``.

    ``r_j = f_n * f_1 / (f_{j+1} * f_j)``, evaluated as
    ``(f_n / f_{j+1}) / f_j`` so that the product in the denominator can
    never overflow on its own.  Requires ``f`` to reach at least ``f_n``.

    Returns a vector of length ``n - 1`` with ``out[j - 1] = r_j``.
    The identity ``r_{n-1} * f_{n-1} = f_1 = 1`` holds to relative 1e-12
    and is what makes the closure scalar's two forms agree.
    """
    f = np.asarray(f, dtype=float)
    n = operator.index(n)
    if n < 3:
        raise InvalidSpecError(f"order n must be at least 3, got {n}")
    if f.ndim != 1 or f.shape[0] < n + 1:
        raise DimensionMismatchError(
            f"need f_0..f_n (length at least {n + 1}), got shape {f.shape}"
        )
    pivots = f[1 : n + 1]
    zeros = np.nonzero(pivots == 0.0)[0]
    if zeros.size:
        raise ZeroPivotError(
            f"f_{zeros[0] + 1} = 0; corner coefficients are undefined",
            index=int(zeros[0] + 1),
        )
    r = (f[n] / f[2 : n + 1]) / f[1:n]
    r *= f[1]
    if not np.isfinite(r).all():
        bad = int(np.nonzero(~np.isfinite(r))[0][0]) + 1
        raise GrowthOverflowError(
            f"r_{bad} exceeds the 64-bit range (f_n = {f[n]})", failing_index=bad
        )
    return r


def compute_g(f, r, n):
    """Closure scalar ``g``: the final pivot of the triangular core.

    Two algebraically equivalent forms are evaluated::

        primary:   1 - f_{n+1} + sum_j r_j + r_{n-1} * f_{n-1}
        alternate: 1 + f_1 - f_{n+1} + sum_j (r_j * f_1)

    Both must agree to relative 1e-12; disagreement means an upstream
    overflow or precision failure and raises InconsistencyError.  The
    primary value is returned.  ``g = 0`` means the circulant matrix is
    singular and raises SingularPivotError.

    Requires ``f`` to reach ``f_{n+1}`` and ``r`` of length ``n - 1``.
    """
    f = np.asarray(f, dtype=float)
    r = np.asarray(r, dtype=float)
    n = operator.index(n)
    if f.ndim != 1 or f.shape[0] < n + 2:
        raise DimensionMismatchError(
            f"need f_0..f_{{n+1}} (length at least {n + 2}), got shape {f.shape}"
        )
    if r.shape != (n - 1,):
        raise DimensionMismatchError(
            f"need r_1..r_{{n-1}} (shape ({n - 1},)), got shape {r.shape}"
        )
    g_primary = float(1.0 - f[n + 1] + r.sum() + r[n - 2] * f[n - 1])
    g_alternate = float(1.0 + f[1] - f[n + 1] + (r * f[1]).sum())
    if not (math.isfinite(g_primary) and math.isfinite(g_alternate)):
        raise GrowthOverflowError(
            f"closure scalar left the 64-bit range (f_{{n+1}} = {f[n + 1]})"
        )
    scale = max(abs(g_primary), abs(g_alternate))
    if scale > 0.0 and abs(g_primary - g_alternate) > G_AGREEMENT_RTOL * scale:
        raise InconsistencyError(
            f"the two closure-scalar forms disagree: {g_primary!r} vs "
            f"{g_alternate!r}; upstream precision loss"
        )
    if g_primary == 0.0:
        raise SingularPivotError(
            f"closure scalar g = 0 at order n = {n}: the circulant matrix is singular"
        )
    return g_primary

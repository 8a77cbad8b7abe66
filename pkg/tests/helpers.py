"""Small shared test utilities."""

import math


def close(a, b, tol):
    """Magnitude-scaled closeness: |a - b| <= tol * max(1, |a|, |b|).

    Coincides with an absolute comparison for O(1) quantities and stays
    meaningful for deformation values that reach ~1e19 in double precision.
    """
    return abs(a - b) <= tol * max(1.0, abs(a), abs(b))


def geometric_probs(r, count):
    """First ``count`` probabilities of the law P_n = (1 - r) r^n."""
    return [(1.0 - r) * r**n for n in range(count)]


def geometric_tail(r, count):
    """Mass discarded by keeping only the first ``count`` terms."""
    return r**count


def bm_reference(q, n):
    """Direct evaluation of the symmetric deformation (q^n - q^-n)/(q - q^-1)."""
    return (q ** float(n) - q ** (-float(n))) / (q - q ** (-1.0))


def undeformed_nbar_squeezed(xi):
    return math.sinh(xi) ** 2


def undeformed_nbar_thermal(theta):
    return 1.0 / math.expm1(theta)

"""Geometric pair-number laws shared by the squeezed and thermal vacua.

Both vacua distribute the pair number n as P_n = (1 - r) r^n for a ratio
r in [0, 1) (r = tanh^2 xi for squeezing, r = e^-theta for temperature).
This module owns everything that depends only on r: cutoff selection,
adaptive d-weighted series summation with divergence detection, and the
closed entropy of the law expressed through its mean.
"""

from __future__ import annotations

import math

from .deformation import DeformationScheme, eval_d
from .paired_state import PairedDiagonalState, from_probabilities

__all__ = [
    "DivergenceError",
    "probability_cutoff",
    "weighted_series",
    "weighted_cutoff",
    "geometric_state",
    "entropy_bits_from_mean",
]

_GROWTH_PATIENCE = 32
_MAX_TERMS = 200_000


class DivergenceError(ArithmeticError):
    """A d-weighted geometric series failed to converge."""

    def __init__(self, message: str, ratio: float | None = None):
        super().__init__(message)
        self.ratio = ratio


def probability_cutoff(ratio: float, tail_tol: float) -> int:
    """Smallest N with geometric tail ratio^(N+1) <= tail_tol."""
    if not 0.0 <= ratio < 1.0:
        raise ValueError(f"geometric ratio must lie in [0, 1), got {ratio!r}")
    if not 0.0 < tail_tol < 1.0:
        raise ValueError(f"tail tolerance must lie in (0, 1), got {tail_tol!r}")
    if ratio == 0.0 or ratio <= tail_tol:
        return 0
    n = max(0, math.ceil(math.log(tail_tol) / math.log(ratio)) - 1)
    while ratio ** (n + 1) > tail_tol:
        n += 1
    while n > 0 and ratio**n <= tail_tol:
        n -= 1
    return n


def _weighted_scan(
    scheme: DeformationScheme,
    ratio: float,
    tol: float,
    prefactor: float | None = None,
) -> tuple[float, int]:
    """Adaptively sum d(n) * prefactor * ratio^n; return (total, last index).

    Terms are accumulated until both the current term and the estimated
    geometric tail drop below tol relative to the running magnitude.  A term
    magnitude that fails to decrease over 32 consecutive steps is reported
    as divergence (this catches growth ratios >= 1 without any scheme-
    specific analysis, so custom laws are handled uniformly).
    """
    if not 0.0 <= ratio < 1.0:
        raise ValueError(f"geometric ratio must lie in [0, 1), got {ratio!r}")
    pref = (1.0 - ratio) if prefactor is None else prefactor
    if ratio == 0.0:
        return 0.0, 0
    terms = []
    running = 0.0
    prev_mag = 0.0
    growth_run = 0
    zero_run = 0
    for n in range(_MAX_TERMS):
        t = eval_d(scheme, n) * pref * ratio**n
        terms.append(t)
        running += t
        mag = abs(t)
        if prev_mag > 0.0 and mag >= prev_mag:
            growth_run += 1
            if growth_run >= _GROWTH_PATIENCE:
                rho = mag / prev_mag
                raise DivergenceError(
                    f"series terms stopped decreasing (term ratio {rho:.6g} >= 1 "
                    f"sustained over {_GROWTH_PATIENCE} terms)",
                    ratio=rho,
                )
        else:
            growth_run = 0
        if n >= 1:
            scale = max(1.0, abs(running))
            if mag == 0.0:
                zero_run += 1
                if zero_run >= 4:  # law vanished or ratio^n underflowed
                    return math.fsum(terms), n
            else:
                zero_run = 0
                if prev_mag > 0.0 and mag < prev_mag:
                    rho = mag / prev_mag
                    tail = mag * rho / (1.0 - rho)
                    if mag < tol * scale and tail < tol * scale:
                        return math.fsum(terms), n
        prev_mag = mag
    raise DivergenceError(f"series did not settle within {_MAX_TERMS} terms")


def weighted_series(
    scheme: DeformationScheme,
    ratio: float,
    tol: float,
    prefactor: float | None = None,
) -> float:
    """Sum of d(n) * prefactor * ratio^n (prefactor defaults to 1 - ratio)."""
    return _weighted_scan(scheme, ratio, tol, prefactor)[0]


def weighted_cutoff(scheme: DeformationScheme, ratio: float, tol: float) -> int:
    """Index beyond which d-weighted geometric terms are negligible."""
    return _weighted_scan(scheme, ratio, tol)[1]


def geometric_state(
    scheme: DeformationScheme, ratio: float, tail_tol: float
) -> PairedDiagonalState:
    """Paired state for P_n = (1 - ratio) ratio^n, cut for accurate moments.

    The cutoff covers both the raw probability tail and the d-weighted tail,
    so second-order moments of the returned state track the full series to
    roughly tail_tol.
    """
    cutoff = max(
        probability_cutoff(ratio, tail_tol),
        weighted_cutoff(scheme, ratio, tail_tol),
    )
    probs = [(1.0 - ratio) * ratio**n for n in range(cutoff + 1)]
    return from_probabilities(probs, ratio ** (cutoff + 1))


def entropy_bits_from_mean(mean: float) -> float:
    """Entropy in bits of a geometric law with the given mean pair number.

    Evaluates (1 + m) log2(1 + m) - m log2 m, which is the Shannon entropy
    of P_n = (1 - r) r^n written through its mean m = r / (1 - r).
    """
    if mean < 0.0:
        raise ValueError(f"mean pair number must be nonnegative, got {mean!r}")
    if mean == 0.0:
        return 0.0
    return (1.0 + mean) * math.log2(1.0 + mean) - mean * math.log2(mean)

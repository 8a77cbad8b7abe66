"""States in the correlated pair sector of a doubled number basis.

A paired diagonal state is sum_n c_n |n, n~> over equal occupation of a
physical mode and its twin, with nonnegative real coefficients.  Both the
squeezed and the thermal vacuum live entirely in this sector, so states
are stored as the coefficient sequence alone, never as the full two-mode
tensor.  Everything here is the brute-force side of the closed forms in
the squeezed/thermal modules: moments are plain truncated sums over the
stored coefficients.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np

from .deformation import DeformationScheme, eval_d

__all__ = [
    "PairedDiagonalState",
    "MomentSet",
    "from_probabilities",
    "moments",
    "quadrature_variances",
    "shannon_entropy_bits",
    "reduced_entropy_bits",
]

_NORM_SLOP = 1e-12


@dataclass(frozen=True)
class PairedDiagonalState:
    """Normalized coefficients c_n over |n, n~>, n = 0..cutoff.

    ``tail_bound`` is an upper bound on the probability mass discarded by
    the cutoff; sum(c_n^2) lies within [1 - tail_bound - 1e-12, 1 + 1e-12].
    """

    coeffs: tuple[float, ...]
    tail_bound: float

    def __post_init__(self):
        if not self.coeffs:
            raise ValueError("state needs at least the vacuum coefficient")
        if any(c < 0.0 or not math.isfinite(c) for c in self.coeffs):
            raise ValueError("coefficients must be finite and nonnegative")
        total = math.fsum(c * c for c in self.coeffs)
        if total > 1.0 + _NORM_SLOP or total < 1.0 - self.tail_bound - _NORM_SLOP:
            raise ValueError(
                f"squared coefficients sum to {total!r}, outside "
                f"[1 - {self.tail_bound!r} - 1e-12, 1 + 1e-12]"
            )

    @property
    def cutoff(self) -> int:
        return len(self.coeffs) - 1

    def probabilities(self) -> list[float]:
        return [c * c for c in self.coeffs]

    def as_json_dict(self) -> dict:
        """Wire form used by CLI dumps: {"coeffs": [...], "tail_bound": x}."""
        return {"coeffs": list(self.coeffs), "tail_bound": self.tail_bound}

    @classmethod
    def from_json_dict(cls, payload: dict) -> "PairedDiagonalState":
        return cls(tuple(float(c) for c in payload["coeffs"]), float(payload["tail_bound"]))


@dataclass(frozen=True)
class MomentSet:
    """Second-order expectations of a paired state.

    adag_a  = <a+ a>        a_adag          = <a a+>
    a_atilde = <a a~>       adag_atildedag  = <a+ a~+>
    """

    adag_a: float
    a_adag: float
    a_atilde: float
    adag_atildedag: float


def from_probabilities(
    probabilities: Sequence[float], tail_bound: float
) -> PairedDiagonalState:
    """Build the state with c_n = sqrt(P_n).

    P must be nonnegative, sum to at most 1 (+1e-12 slack), and leave no
    more than ``tail_bound`` of mass unaccounted for.
    """
    probs = [float(p) for p in probabilities]
    for n, p in enumerate(probs):
        if p < 0.0 or not math.isfinite(p):
            raise ValueError(f"negative probability P[{n}] = {p!r}")
    total = math.fsum(probs)
    if total > 1.0 + _NORM_SLOP:
        raise ValueError(f"probabilities sum to {total!r} > 1")
    if 1.0 - total > tail_bound + _NORM_SLOP:
        raise ValueError(
            f"mass deficit {1.0 - total!r} exceeds tail bound {tail_bound!r}"
        )
    return PairedDiagonalState(tuple(math.sqrt(p) for p in probs), tail_bound)


def moments(state: PairedDiagonalState, scheme: DeformationScheme) -> MomentSet:
    """Truncated-sum second moments of a paired state under a scheme.

    With P_n = c_n^2 and d the scheme's spectrum function:

        <a+ a>  = sum d(n)   P_n
        <a a+>  = sum d(n+1) P_n
        <a a~>  = <a+ a~+> = sum d(n) c_{n-1} c_n

    The cross moment follows from a a~ |n, n~> = d(n) |n-1, n~-1> and the
    orthogonality of the pair basis.
    """
    c = state.coeffs
    d = [eval_d(scheme, n) for n in range(len(c) + 1)]
    adag_a = math.fsum(d[n] * c[n] * c[n] for n in range(len(c)))
    a_adag = math.fsum(d[n + 1] * c[n] * c[n] for n in range(len(c)))
    cross = math.fsum(d[n] * c[n - 1] * c[n] for n in range(1, len(c)))
    return MomentSet(adag_a, a_adag, cross, cross)


def quadrature_variances(m: MomentSet) -> tuple[float, float]:
    """Variances of the symmetric/antisymmetric two-mode quadratures.

    The quadratures are u1 = (a + a+ + a~ + a~+) / 2^(3/2) and
    u2 = (a - a+ + a~ - a~+) / (2^(3/2) i).  On a diagonal pair state the
    first moments vanish: a single ladder action turns |n, n~> into a
    state with unequal occupation of the two modes, orthogonal to every
    |m, m~>, so <u_i> = 0 and the variance is just <u_i^2>.  Expanding the
    squares, the only products that preserve equal pair occupation are
    a a+, a+ a, their twin-mode copies, and the correlated pairs a a~ and
    a+ a~+ (twin-mode moments equal the physical ones by symmetry of the
    state), giving

        var1 = (adag_a + a_adag) / 4 + (a_atilde + adag_atildedag) / 4
        var2 = (adag_a + a_adag) / 4 - (a_atilde + adag_atildedag) / 4
    """
    symmetric = 0.25 * (m.adag_a + m.a_adag)
    cross = 0.25 * (m.a_atilde + m.adag_atildedag)
    return symmetric + cross, symmetric - cross


def shannon_entropy_bits(probabilities: Sequence[float]) -> float:
    """Shannon entropy -sum P log2 P in bits, with 0 log 0 = 0.

    The sequence must be a distribution: nonnegative, total within 1e-9
    of 1.
    """
    probs = [float(p) for p in probabilities]
    for n, p in enumerate(probs):
        if p < 0.0 or not math.isfinite(p):
            raise ValueError(f"negative probability P[{n}] = {p!r}")
    total = math.fsum(probs)
    if abs(total - 1.0) > 1e-9:
        raise ValueError(f"probabilities sum to {total!r}, not 1")
    return -math.fsum(p * math.log2(p) for p in probs if p > 0.0)


def reduced_entropy_bits(state: PairedDiagonalState) -> float:
    """Entanglement entropy in bits via the reduced density operator.

    Assembles the two-mode amplitude matrix psi[n, m] = c_n delta_nm,
    traces out the twin mode (rho = psi psi^T), and takes the von Neumann
    entropy of the eigenvalues.  For diagonal pair states this equals the
    Shannon entropy of {c_n^2}; going through the density-matrix route
    keeps it an independent structural cross-check.
    """
    psi = np.diag(np.asarray(state.coeffs, dtype=float))
    rho = psi @ psi.T
    evals = np.linalg.eigvalsh(rho)
    evals = np.clip(evals, 0.0, None)
    return float(-math.fsum(v * math.log2(v) for v in evals if v > 0.0))

"""Dense truncated matrices over the number basis |0> .. |N_max>.

The ladder matrices carry sqrt(d(n+1)) on the off-diagonals, so a+ a is
diagonal with entries d(n) on the whole truncated space, while relations
involving a a+ only hold away from the cutoff.  Algebra checks are
therefore restricted to the interior block (row/column index < dim - 1),
where the truncation cannot be felt.

Residuals are reported in a floating-point-sane normalized form: the
max-abs entry of (lhs - rhs) divided by max(1, largest magnitude among
the operand products entering the relation).  Deformation values reach
~1e19 at dim 64 for q = 2, where a bare entrywise difference is dominated
by double-precision rounding of the large entries; the normalized form
keeps one tolerance meaningful at every dimension.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .deformation import BIEDENHARN_MACFARLANE, DeformationScheme, eval_d

__all__ = [
    "TruncatedOperator",
    "AlgebraReport",
    "RELATION_NAMES",
    "projector",
    "annihilation_matrix",
    "creation_matrix",
    "number_matrix",
    "identity_matrix",
    "deformation_diagonal",
    "commutator",
    "tensor_pair",
    "verify_algebra",
]

RELATION_NAMES = (
    "ladder_product",  # a+ a = diag d(n)
    "shifted_ladder_product",  # a a+ = diag d(n+1)
    "ladder_commutator",  # [a, a+] = diag d(n+1) - d(n)
    "number_raises",  # [N, a+] = a+
    "number_lowers",  # [N, a] = -a
    "q_commutation",  # a a+ - q a+ a = diag q^-n   (symmetric scheme only)
)


@dataclass(frozen=True)
class TruncatedOperator:
    """A dim x dim real matrix indexed by occupation number 0..dim-1."""

    dim: int
    entries: np.ndarray

    def __post_init__(self):
        if self.dim < 1:
            raise ValueError(f"dimension must be positive, got {self.dim}")
        entries = np.asarray(self.entries, dtype=float)
        if entries.shape != (self.dim, self.dim):
            raise ValueError(
                f"entries have shape {entries.shape}, expected {(self.dim, self.dim)}"
            )
        if not np.all(np.isfinite(entries)):
            raise ValueError("entries must all be finite")
        entries.flags.writeable = False
        object.__setattr__(self, "entries", entries)


def projector(m: int, n: int, dim: int) -> TruncatedOperator:
    """Matrix unit |m><n|: a single 1 at row m, column n."""
    if not (0 <= m < dim and 0 <= n < dim):
        raise IndexError(f"projector indices ({m}, {n}) out of range for dim {dim}")
    entries = np.zeros((dim, dim))
    entries[m, n] = 1.0
    return TruncatedOperator(dim, entries)


def _ladder_values(scheme: DeformationScheme, dim: int) -> np.ndarray:
    values = np.empty(max(dim - 1, 0))
    for n in range(dim - 1):
        d = eval_d(scheme, n + 1)
        if d < 0.0:
            raise ValueError(
                f"deformation value d({n + 1}) = {d!r} is negative; "
                "ladder entries need d >= 0"
            )
        values[n] = math.sqrt(d)
    return values


def annihilation_matrix(scheme: DeformationScheme, dim: int) -> TruncatedOperator:
    """Annihilation: sqrt(d(n+1)) on the superdiagonal, n = 0..dim-2."""
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    return TruncatedOperator(dim, np.diag(_ladder_values(scheme, dim), 1))


def creation_matrix(scheme: DeformationScheme, dim: int) -> TruncatedOperator:
    """Creation: transpose of the annihilation matrix."""
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    return TruncatedOperator(dim, np.diag(_ladder_values(scheme, dim), -1))


def number_matrix(dim: int) -> TruncatedOperator:
    """Number operator: diag(0, 1, ..., dim-1)."""
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    return TruncatedOperator(dim, np.diag(np.arange(dim, dtype=float)))


def identity_matrix(dim: int) -> TruncatedOperator:
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    return TruncatedOperator(dim, np.eye(dim))


def deformation_diagonal(
    scheme: DeformationScheme, dim: int, shift: int = 0
) -> TruncatedOperator:
    """diag(d(n + shift)) for n = 0..dim-1; shift 1 gives the a a+ spectrum.

    Built entrywise from the scheme (values past the stored ladder are
    computed on demand), never by a matrix function of N.
    """
    if dim < 1:
        raise ValueError(f"dimension must be positive, got {dim}")
    return TruncatedOperator(
        dim, np.diag([eval_d(scheme, n + shift) for n in range(dim)])
    )


def commutator(a: TruncatedOperator, b: TruncatedOperator) -> TruncatedOperator:
    """AB - BA."""
    if a.dim != b.dim:
        raise ValueError(f"dimension mismatch: {a.dim} vs {b.dim}")
    return TruncatedOperator(a.dim, a.entries @ b.entries - b.entries @ a.entries)


def tensor_pair(a: TruncatedOperator, b: TruncatedOperator) -> TruncatedOperator:
    """Kronecker product acting on (physical, twin) mode pairs.

    Slow path for cross-validating paired-state reductions in tests; the
    result is (dim_a * dim_b)^2 entries, so keep dims small (<= 16).
    """
    return TruncatedOperator(a.dim * b.dim, np.kron(a.entries, b.entries))


@dataclass(frozen=True)
class AlgebraReport:
    """Normalized max-abs residuals of the ladder algebra on the interior.

    ``residuals`` maps relation names (see RELATION_NAMES) to their
    normalized residual over rows/columns with index < dim - 1; the
    q_commutation entry is present only for the symmetric built-in scheme.
    """

    dim: int
    tol: float
    residuals: dict[str, float]

    @property
    def max_residual(self) -> float:
        return max(self.residuals.values())

    @property
    def passed(self) -> bool:
        return all(r < self.tol for r in self.residuals.values())


def _interior_residual(delta: np.ndarray, *operands: np.ndarray) -> float:
    interior = delta[: delta.shape[0] - 1, : delta.shape[1] - 1]
    scale = max([1.0] + [float(np.abs(op).max()) for op in operands])
    return float(np.abs(interior).max() / scale)


def verify_algebra(scheme: DeformationScheme, dim: int, tol: float) -> AlgebraReport:
    """Machine-check the deformed ladder relations at a finite cutoff.

    Report-only: residuals are recorded against ``tol`` but nothing is
    raised.  All relations are evaluated on the interior block only, since
    the cut superdiagonal makes a a+ wrong in the last row/column.
    """
    if dim < 2:
        raise ValueError(f"need dim >= 2 to form an interior block, got {dim}")
    a = annihilation_matrix(scheme, dim).entries
    adag = creation_matrix(scheme, dim).entries
    num = number_matrix(dim).entries
    d_n = deformation_diagonal(scheme, dim).entries
    d_n1 = deformation_diagonal(scheme, dim, shift=1).entries

    adag_a = adag @ a
    a_adag = a @ adag
    n_adag = num @ adag
    adag_n = adag @ num
    n_a = num @ a
    a_n = a @ num

    residuals = {
        "ladder_product": _interior_residual(adag_a - d_n, adag_a, d_n),
        "shifted_ladder_product": _interior_residual(a_adag - d_n1, a_adag, d_n1),
        "ladder_commutator": _interior_residual(
            (a_adag - adag_a) - (d_n1 - d_n), a_adag, adag_a, d_n1 - d_n
        ),
        "number_raises": _interior_residual(
            (n_adag - adag_n) - adag, n_adag, adag_n, adag
        ),
        "number_lowers": _interior_residual((n_a - a_n) + a, n_a, a_n, a),
    }
    if scheme.kind == BIEDENHARN_MACFARLANE:
        q_pow = np.diag(scheme.q ** -np.arange(dim, dtype=float))
        q_scaled = scheme.q * adag_a
        residuals["q_commutation"] = _interior_residual(
            a_adag - q_scaled - q_pow, a_adag, q_scaled, q_pow
        )
    return AlgebraReport(dim=dim, tol=tol, residuals=residuals)

"""Deformation schemes: the spectrum function d(n) of a deformed boson mode.

A scheme assigns to each occupation number n the eigenvalue d(n) of the
ladder product a+ a, normalized so that d(0) = 0 and d(1) = 1.  The
undeformed oscillator has d(n) = n.  The built-in symmetric one-parameter
generalization

    d(n) = (q^n - q^-n) / (q - q^-1)

is invariant under q <-> 1/q and reduces to n as q -> 1 (the ratio loses
all precision near q = 1, so inside a small window around it the limit
value is returned directly).  Arbitrary user-supplied laws in q and n are
accepted as expression text; they are probed at n = 0 and n = 1 during
construction, since everything downstream assumes d(0) = 0 and d(1) = 1.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .expressions import (
    EvaluationError,
    ExpressionTree,
    evaluate_tree,
    parse_deformation,
    render,
)

__all__ = [
    "UNDEFORMED",
    "BIEDENHARN_MACFARLANE",
    "CUSTOM",
    "Q_LIMIT_WINDOW",
    "DeformationScheme",
    "eval_d",
    "d_factorial",
]

UNDEFORMED = "undeformed"
BIEDENHARN_MACFARLANE = "biedenharn-macfarlane"
CUSTOM = "custom"
_KINDS = (UNDEFORMED, BIEDENHARN_MACFARLANE, CUSTOM)

# |q - 1| below this: the symmetric scheme switches to its q -> 1 limit d(n) = n.
Q_LIMIT_WINDOW = 1e-8

_PROBE_TOL = 1e-12


@dataclass(frozen=True)
class DeformationScheme:
    """An immutable deformation law d(n) together with its parameter q.

    Use the classmethod constructors; q must be a positive finite real for
    every kind.  Instances are safe to share between threads.
    """

    kind: str
    q: float = 1.0
    expr: ExpressionTree | None = None
    source: str | None = None

    def __post_init__(self):
        if self.kind not in _KINDS:
            raise ValueError(f"unknown deformation kind {self.kind!r}")
        q = float(self.q)
        if not math.isfinite(q) or q <= 0.0:
            raise ValueError(f"deformation parameter q must be positive, got {self.q!r}")
        object.__setattr__(self, "q", q)
        if self.kind == CUSTOM:
            if self.expr is None:
                raise ValueError("custom scheme requires a parsed expression")
            self._probe()
        elif self.expr is not None:
            raise ValueError(f"{self.kind} scheme takes no expression")

    def _probe(self):
        for n, want in ((0, 0.0), (1, 1.0)):
            try:
                got = evaluate_tree(self.expr, self.q, float(n))
            except EvaluationError as exc:
                raise ValueError(f"custom deformation rejected: {exc}") from exc
            if abs(got - want) > _PROBE_TOL:
                raise ValueError(
                    f"custom deformation must satisfy d({n}) = {want:g}, "
                    f"got {got!r} at q={self.q!r}"
                )

    @classmethod
    def undeformed(cls) -> "DeformationScheme":
        return cls(UNDEFORMED)

    @classmethod
    def biedenharn_macfarlane(cls, q: float) -> "DeformationScheme":
        return cls(BIEDENHARN_MACFARLANE, q)

    @classmethod
    def custom(cls, source: str | ExpressionTree, q: float) -> "DeformationScheme":
        if isinstance(source, str):
            tree = parse_deformation(source)
            text = source
        else:
            tree = source
            text = render(source)
        return cls(CUSTOM, q, tree, text)

    @property
    def label(self) -> str:
        """Short human-readable descriptor (expression text for custom laws)."""
        if self.kind == CUSTOM:
            return self.source or render(self.expr)
        return self.kind


def eval_d(scheme: DeformationScheme, n: int) -> float:
    """Deformation value d(n) for occupation number n >= 0."""
    m = int(n)
    if m != n or m < 0:
        raise ValueError(f"occupation number must be a nonnegative integer, got {n!r}")
    if scheme.kind == UNDEFORMED:
        return float(m)
    if scheme.kind == BIEDENHARN_MACFARLANE:
        q = scheme.q
        if abs(q - 1.0) < Q_LIMIT_WINDOW:
            return float(m)
        value = (q ** float(m) - q ** (-float(m))) / (q - q**-1.0)
        if not math.isfinite(value):
            raise OverflowError(f"deformation value overflowed at n={m} (q={q!r})")
        return value
    return evaluate_tree(scheme.expr, scheme.q, float(m))


def d_factorial(scheme: DeformationScheme, n: int) -> float:
    """Deformed factorial: product of d(k) for k = 1..n (1 for n = 0)."""
    m = int(n)
    if m != n or m < 0:
        raise ValueError(f"occupation number must be a nonnegative integer, got {n!r}")
    total = 1.0
    for k in range(1, m + 1):
        total *= eval_d(scheme, k)
        if not math.isfinite(total):
            raise OverflowError(f"deformed factorial overflowed at n={k}")
    return total

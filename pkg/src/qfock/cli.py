"""Command-line front end: parameter sweeps, algebra checks, operator dumps.

Subcommands::

    qfock sweep squeezed --scheme bm --q 0.5,2 --xi 0.1,1 [--format csv|json]
    qfock sweep thermal  --scheme bm --q 2 --theta 1,2,3
    qfock verify --scheme bm --q 2 --dims 16,64 [--tol 1e-10]
    qfock ops annihilation --scheme undeformed --dim 4
    qfock parse "(q^n - q^(-n))/(q - q^(-1))" [--q 2 --n 3]

Exit codes: 0 success, 1 usage/parse error, 2 verification failure,
3 I/O error.  Sweep output is deterministic: fixed row order (q-major,
parameter-minor) and shortest round-trip number formatting, so repeated
runs are byte-identical.  Rows in divergent corners of a grid are flagged
in the status column instead of aborting the batch.
"""

from __future__ import annotations

import argparse
import json
import math
import sys
from dataclasses import dataclass

from .deformation import CUSTOM, Q_LIMIT_WINDOW, UNDEFORMED, DeformationScheme
from .expressions import (
    EvaluationError,
    ExpressionError,
    evaluate_tree,
    parse_deformation,
    render,
)
from .fock_matrix import (
    annihilation_matrix,
    creation_matrix,
    identity_matrix,
    number_matrix,
    verify_algebra,
)
from .geometric import DivergenceError
from .paired_state import shannon_entropy_bits
from .squeezed import (
    SqueezedSpec,
    entanglement_entropy_closed,
    nbar_closed_bm,
    nbar_series,
    squeezed_probabilities,
    squeezed_variances_from_nbar,
)
from .thermal import (
    ThermalSpec,
    thermal_entropy_bits,
    thermal_nbar_closed_bm,
    thermal_nbar_series,
    thermal_probabilities,
    thermal_variances_closed,
)

__all__ = ["SweepSpec", "ResultRow", "run_sweep", "run_verify", "run_ops_dump", "main"]

CSV_HEADER = (
    "q,param,nbar_series,nbar_closed,var1,var2,product,"
    "entropy_closed,entropy_series,cutoff,tail_bound,status"
)

# Flag when series and closed-form means disagree beyond this.
_MISMATCH_TOL = 1e-8

_OPERATORS = ("annihilation", "creation", "number", "identity")


class _UsageError(Exception):
    pass


@dataclass(frozen=True)
class SweepSpec:
    """One sweep request: Cartesian product of q values and parameters."""

    family: str  # "squeezed" or "thermal"
    scheme: str  # descriptor: undeformed | bm | expr:<text>
    q_values: tuple[float, ...]
    param_values: tuple[float, ...]  # xi for squeezed, theta for thermal
    tail_tol: float = 1e-12
    fmt: str = "csv"
    out: str | None = None

    def __post_init__(self):
        if self.family not in ("squeezed", "thermal"):
            raise ValueError(f"unknown sweep family {self.family!r}")
        if not self.q_values or not self.param_values:
            raise ValueError("q and parameter value lists must be non-empty")
        if not 0.0 < self.tail_tol < 1.0:
            raise ValueError(f"tail tolerance must lie in (0, 1), got {self.tail_tol!r}")
        if self.fmt not in ("csv", "json"):
            raise ValueError(f"unknown output format {self.fmt!r}")


@dataclass(frozen=True)
class ResultRow:
    q: float
    param: float
    nbar_series: float | None
    nbar_closed: float | None
    var1: float | None
    var2: float | None
    product: float | None
    entropy_closed: float
    entropy_series: float | None
    cutoff: int
    tail_bound: float
    status: str

    def as_dict(self) -> dict:
        return {
            "q": self.q,
            "param": self.param,
            "nbar_series": self.nbar_series,
            "nbar_closed": self.nbar_closed,
            "var1": self.var1,
            "var2": self.var2,
            "product": self.product,
            "entropy_closed": self.entropy_closed,
            "entropy_series": self.entropy_series,
            "cutoff": self.cutoff,
            "tail_bound": self.tail_bound,
            "status": self.status,
        }


def resolve_scheme(descriptor: str, q: float) -> DeformationScheme:
    """Map a CLI scheme descriptor to a DeformationScheme."""
    if descriptor == "undeformed":
        return DeformationScheme.undeformed()
    if descriptor in ("bm", "biedenharn-macfarlane"):
        return DeformationScheme.biedenharn_macfarlane(q)
    if descriptor.startswith("expr:"):
        return DeformationScheme.custom(descriptor[len("expr:") :], q)
    raise _UsageError(
        f"unknown scheme {descriptor!r} (use undeformed, bm, or expr:<text>)"
    )


def _closed_nbar(family: str, scheme: DeformationScheme, param: float) -> float | None:
    """Closed-form mean for the row, or None when no closed form applies."""
    if scheme.kind == CUSTOM:
        return None
    if scheme.kind == UNDEFORMED or abs(scheme.q - 1.0) < Q_LIMIT_WINDOW:
        if family == "squeezed":
            return math.sinh(param) ** 2
        return 1.0 / math.expm1(param)
    if family == "squeezed":
        return nbar_closed_bm(scheme.q, param)
    return thermal_nbar_closed_bm(scheme.q, param)


def _compute_row(
    family: str, descriptor: str, q: float, param: float, tail_tol: float
) -> ResultRow:
    scheme = resolve_scheme(descriptor, q)
    if family == "squeezed":
        spec = SqueezedSpec(xi=param, scheme=scheme, tail_tol=tail_tol)
        probs = squeezed_probabilities(spec)
        ratio = spec.ratio
        entropy_closed = entanglement_entropy_closed(param)
    else:
        spec = ThermalSpec(theta=param, scheme=scheme, tail_tol=tail_tol)
        probs = thermal_probabilities(spec)
        ratio = spec.ratio
        entropy_closed = thermal_entropy_bits(param)
    cutoff = len(probs) - 1
    tail_bound = ratio ** (cutoff + 1)

    flags = []
    convergent = True
    series = None
    try:
        series = nbar_series(spec) if family == "squeezed" else thermal_nbar_series(spec)
    except DivergenceError:
        convergent = False

    closed = None
    try:
        closed = _closed_nbar(family, scheme, param)
    except DivergenceError:
        closed = None
    if closed is None:
        flags.append("closed-form-skipped")

    var1 = var2 = product = None
    if series is not None:
        if family == "squeezed":
            var1, var2, product = squeezed_variances_from_nbar(param, series)
        else:
            var1, var2, product = thermal_variances_closed(param, series)

    entropy_series = None
    try:
        entropy_series = shannon_entropy_bits(probs)
    except ValueError:
        flags.append("entropy-skipped")

    if series is not None and closed is not None:
        if abs(series - closed) >= _MISMATCH_TOL:
            flags.append("mismatch")

    status = ";".join(["convergent" if convergent else "divergent"] + flags)
    return ResultRow(
        q=float(q),
        param=float(param),
        nbar_series=series,
        nbar_closed=closed,
        var1=var1,
        var2=var2,
        product=product,
        entropy_closed=entropy_closed,
        entropy_series=entropy_series,
        cutoff=cutoff,
        tail_bound=tail_bound,
        status=status,
    )


def run_sweep(spec: SweepSpec) -> list[ResultRow]:
    """One row per (q, parameter) pair, q-major then parameter-minor."""
    rows = []
    for q in spec.q_values:
        for param in spec.param_values:
            rows.append(_compute_row(spec.family, spec.scheme, q, param, spec.tail_tol))
    return rows


def _cell(value) -> str:
    if value is None:
        return ""
    if isinstance(value, float):
        return repr(value)
    return str(value)


def render_csv(rows: list[ResultRow]) -> str:
    lines = [CSV_HEADER]
    for row in rows:
        lines.append(",".join(_cell(v) for v in row.as_dict().values()))
    return "\n".join(lines) + "\n"


def render_json(rows: list[ResultRow]) -> str:
    return json.dumps([row.as_dict() for row in rows], indent=2) + "\n"


def run_verify(
    descriptor: str, q_values: list[float], dims: list[int], tol: float
) -> tuple[str, int]:
    """Residual report over (q, dim) pairs; exit code 0 iff all pass tol."""
    lines = []
    all_passed = True
    for q in q_values:
        scheme = resolve_scheme(descriptor, q)
        for dim in dims:
            report = verify_algebra(scheme, dim, tol)
            lines.append(f"scheme={scheme.label} q={_cell(scheme.q)} dim={dim}")
            for name, residual in report.residuals.items():
                verdict = "PASS" if residual < tol else "FAIL"
                lines.append(f"  {name:<24} {residual:.3e}  {verdict}")
            all_passed = all_passed and report.passed
    lines.append("overall: " + ("PASS" if all_passed else "FAIL"))
    return "\n".join(lines) + "\n", 0 if all_passed else 2


def run_ops_dump(descriptor: str, q: float, dim: int, operator: str) -> str:
    """JSON dump of one truncated operator matrix."""
    if operator not in _OPERATORS:
        raise _UsageError(
            f"unknown operator {operator!r} (choose from {', '.join(_OPERATORS)})"
        )
    if not 1 <= dim <= 512:
        raise _UsageError(f"dim must lie between 1 and 512, got {dim}")
    scheme = resolve_scheme(descriptor, q)
    if operator == "annihilation":
        op = annihilation_matrix(scheme, dim)
    elif operator == "creation":
        op = creation_matrix(scheme, dim)
    elif operator == "number":
        op = number_matrix(dim)
    else:
        op = identity_matrix(dim)
    payload = {
        "scheme": scheme.label,
        "q": scheme.q,
        "dim": dim,
        "operator": operator,
        "entries": op.entries.tolist(),
    }
    return json.dumps(payload) + "\n"


def _parse_float_list(text) -> tuple[float, ...]:
    if isinstance(text, (list, tuple)):
        return tuple(float(v) for v in text)
    try:
        return tuple(float(s) for s in str(text).split(",") if s.strip())
    except ValueError as exc:
        raise _UsageError(f"invalid number list {text!r}") from exc


def _parse_int_list(text) -> list[int]:
    try:
        return [int(s) for s in str(text).split(",") if s.strip()]
    except ValueError as exc:
        raise _UsageError(f"invalid integer list {text!r}") from exc


def _load_config(path: str) -> dict:
    with open(path) as fh:
        raw = fh.read()
    try:
        data = json.loads(raw)
    except json.JSONDecodeError as exc:
        raise _UsageError(f"invalid config {path!r}: {exc}") from exc
    if not isinstance(data, dict):
        raise _UsageError(f"config {path!r} must hold a JSON object")
    return data


def _pick(cli_value, config: dict, key: str, default):
    if cli_value is not None:
        return cli_value
    return config.get(key, default)


def _emit(text: str, out: str | None) -> None:
    if out is None or out == "-":
        sys.stdout.write(text)
    else:
        with open(out, "w") as fh:
            fh.write(text)


def _cmd_sweep(args) -> int:
    config = _load_config(args.config) if args.config else {}
    if args.family == "squeezed":
        if args.theta is not None:
            raise _UsageError("use --xi with squeezed sweeps")
        params = _pick(args.xi, config, "xi", None)
        key = "xi"
    else:
        if args.xi is not None:
            raise _UsageError("use --theta with thermal sweeps")
        params = _pick(args.theta, config, "theta", None)
        key = "theta"
    if params is None:
        raise _UsageError(f"missing --{key} values for a {args.family} sweep")
    try:
        spec = SweepSpec(
            family=args.family,
            scheme=_pick(args.scheme, config, "scheme", "undeformed"),
            q_values=_parse_float_list(_pick(args.q, config, "q", "1")),
            param_values=_parse_float_list(params),
            tail_tol=float(_pick(args.tail_tol, config, "tail_tol", 1e-12)),
            fmt=_pick(args.format, config, "format", "csv"),
            out=_pick(args.out, config, "out", None),
        )
    except ValueError as exc:
        raise _UsageError(str(exc)) from exc
    rows = run_sweep(spec)
    text = render_csv(rows) if spec.fmt == "csv" else render_json(rows)
    _emit(text, spec.out)
    return 0


def _cmd_verify(args) -> int:
    dims = _parse_int_list(args.dims)
    if any(d < 2 for d in dims):
        raise _UsageError("verify needs dims >= 2")
    text, code = run_verify(args.scheme, list(_parse_float_list(args.q)), dims, args.tol)
    sys.stdout.write(text)
    return code


def _cmd_ops(args) -> int:
    sys.stdout.write(run_ops_dump(args.scheme, args.q, args.dim, args.operator))
    return 0


def _cmd_parse(args) -> int:
    tree = parse_deformation(args.expression)
    payload = {"source": args.expression, "canonical": render(tree)}
    if args.q is not None or args.n is not None:
        if args.q is None or args.n is None:
            raise _UsageError("--q and --n must be given together")
        payload["value"] = evaluate_tree(tree, args.q, float(args.n))
    sys.stdout.write(json.dumps(payload) + "\n")
    return 0


class _ArgumentParser(argparse.ArgumentParser):
    def error(self, message):
        raise _UsageError(message)


def _build_parser() -> _ArgumentParser:
    parser = _ArgumentParser(prog="qfock", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sweep = sub.add_parser("sweep", help="parameter sweep to CSV/JSON")
    sweep.add_argument("family", choices=["squeezed", "thermal"])
    sweep.add_argument("--scheme", help="undeformed | bm | expr:<text>")
    sweep.add_argument("--q", help="comma-separated deformation parameters")
    sweep.add_argument("--xi", help="comma-separated squeezing parameters")
    sweep.add_argument("--theta", help="comma-separated beta*omega values")
    sweep.add_argument("--tail-tol", dest="tail_tol", type=float)
    sweep.add_argument("--format", choices=["csv", "json"])
    sweep.add_argument("--out", help="output path (default stdout)")
    sweep.add_argument("--config", help="JSON file with sweep defaults")
    sweep.set_defaults(func=_cmd_sweep)

    verify = sub.add_parser("verify", help="check the ladder algebra residuals")
    verify.add_argument("--scheme", default="undeformed")
    verify.add_argument("--q", default="1")
    verify.add_argument("--dims", default="16,64")
    verify.add_argument("--tol", type=float, default=1e-10)
    verify.set_defaults(func=_cmd_verify)

    ops = sub.add_parser("ops", help="dump one operator matrix as JSON")
    ops.add_argument("operator")
    ops.add_argument("--scheme", default="undeformed")
    ops.add_argument("--q", type=float, default=1.0)
    ops.add_argument("--dim", type=int, required=True)
    ops.set_defaults(func=_cmd_ops)

    parse = sub.add_parser("parse", help="validate a deformation expression")
    parse.add_argument("expression")
    parse.add_argument("--q", type=float)
    parse.add_argument("--n", type=int)
    parse.set_defaults(func=_cmd_parse)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
        return args.func(args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ExpressionError, EvaluationError, ValueError, OverflowError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    sys.exit(main())

"""Acceptance suite: one test per criterion, one printed verdict line each.

Run ``pytest tests/test_acceptance.py -s`` to see the verdict lines as the
suite executes.  Every tolerance is pinned here; nothing is calibrated at
runtime.
"""

import json
import math

import pytest

from qfock import (
    DeformationScheme,
    SqueezedSpec,
    ThermalSpec,
    entanglement_entropy_closed,
    from_probabilities,
    geometric_state,
    moments,
    nbar_closed_bm,
    nbar_series,
    parse_deformation,
    quadrature_variances,
    reduced_entropy_bits,
    shannon_entropy_bits,
    squeezed_probabilities,
    squeezed_variances_closed,
    thermal_entropy_bits,
    thermal_nbar_closed_bm,
    thermal_nbar_series,
    thermal_probabilities,
    thermal_variances_closed,
    verify_algebra,
)
from qfock.cli import SweepSpec, main, run_sweep
from qfock.expressions import ExpressionError

from helpers import bm_reference, close

BM_TEXT = "(q^n - q^(-n))/(q - q^(-1))"

Q_GRID = [0.5, 0.9, 1.1, 2.0]
SQUEEZED_RATIOS = [0.1, 0.3, 0.5]
THERMAL_THETAS = [1.0, 2.0, 3.0]
XI_VALUES = [0.1, 1.0, 2.0]
THETA_VALUES = [0.2, 1.0, 3.0]


def _verdict(label, failures):
    status = "PASS" if not failures else "FAIL"
    print(f"[{status}] {label}")
    assert not failures, f"{label}: " + "; ".join(failures)


def _squeezed_grid():
    for q in Q_GRID:
        for r in SQUEEZED_RATIOS:
            if max(q, 1.0 / q) * r < 1.0:
                yield q, r, math.atanh(math.sqrt(r))


def _thermal_grid():
    for q in Q_GRID:
        for theta in THERMAL_THETAS:
            if theta > abs(math.log(q)):
                yield q, theta


def test_criterion_1_algebra_suite():
    failures = []
    schemes = [
        DeformationScheme.undeformed(),
        DeformationScheme.biedenharn_macfarlane(0.5),
        DeformationScheme.biedenharn_macfarlane(2.0),
    ]
    for scheme in schemes:
        report = verify_algebra(scheme, 64, 1e-10)
        for name, residual in report.residuals.items():
            if residual >= 1e-10:
                failures.append(f"{scheme.label}: {name} residual {residual:.3e}")
        if scheme.kind == "biedenharn-macfarlane" and "q_commutation" not in report.residuals:
            failures.append(f"{scheme.label}: q_commutation relation missing")
    _verdict("criterion 1: ladder-algebra residuals at dim 64", failures)


def test_criterion_2_normalization():
    failures = []
    plain = DeformationScheme.undeformed()
    for xi in XI_VALUES:
        total = math.fsum(
            squeezed_probabilities(SqueezedSpec(xi=xi, scheme=plain, tail_tol=1e-12))
        )
        if abs(total - 1.0) > 1e-12:
            failures.append(f"squeezed xi={xi}: |sum-1| = {abs(total - 1.0):.3e}")
    for theta in THETA_VALUES:
        total = math.fsum(
            thermal_probabilities(ThermalSpec(theta=theta, scheme=plain, tail_tol=1e-12))
        )
        if abs(total - 1.0) > 1e-12:
            failures.append(f"thermal theta={theta}: |sum-1| = {abs(total - 1.0):.3e}")
    _verdict("criterion 2: tail-bounded normalization within 1e-12", failures)


def test_criterion_3_mean_photon_closed_forms():
    failures = []
    for q, r, xi in _squeezed_grid():
        scheme = DeformationScheme.biedenharn_macfarlane(q)
        series = nbar_series(SqueezedSpec(xi=xi, scheme=scheme))
        closed = nbar_closed_bm(q, xi)
        if abs(closed - series) > 1e-10:
            failures.append(f"squeezed q={q} r={r}: |closed-series| = {abs(closed - series):.3e}")
    for q, theta in _thermal_grid():
        scheme = DeformationScheme.biedenharn_macfarlane(q)
        series = thermal_nbar_series(ThermalSpec(theta=theta, scheme=scheme))
        closed = thermal_nbar_closed_bm(q, theta)
        if abs(closed - series) > 1e-10:
            failures.append(f"thermal q={q} theta={theta}: {abs(closed - series):.3e}")
    limit = DeformationScheme.biedenharn_macfarlane(1.0)
    for xi in XI_VALUES:
        series = nbar_series(SqueezedSpec(xi=xi, scheme=limit))
        if abs(series - math.sinh(xi) ** 2) > 1e-10:
            failures.append(f"squeezed q=1 xi={xi}: series off sinh^2")
    for theta in THETA_VALUES:
        series = thermal_nbar_series(ThermalSpec(theta=theta, scheme=limit))
        if abs(series - 1.0 / math.expm1(theta)) > 1e-10:
            failures.append(f"thermal q=1 theta={theta}: series off Bose mean")
    _verdict("criterion 3: closed-form means match series within 1e-10", failures)


def test_criterion_4_variance_closed_forms():
    failures = []
    for q, r, xi in _squeezed_grid():
        scheme = DeformationScheme.biedenharn_macfarlane(q)
        var1, var2, product = squeezed_variances_closed(q, xi)
        state = geometric_state(scheme, r, 1e-13)
        mvar1, mvar2 = quadrature_variances(moments(state, scheme))
        for got, want, tag in (
            (var1, mvar1, "var1"),
            (var2, mvar2, "var2"),
            (product, mvar1 * mvar2, "product"),
        ):
            if abs(got - want) > 1e-10:
                failures.append(f"squeezed q={q} r={r} {tag}: {abs(got - want):.3e}")
    for q, theta in _thermal_grid():
        scheme = DeformationScheme.biedenharn_macfarlane(q)
        nbar = thermal_nbar_series(ThermalSpec(theta=theta, scheme=scheme))
        var1, var2, product = thermal_variances_closed(theta, nbar)
        state = geometric_state(scheme, math.exp(-theta), 1e-13)
        mvar1, mvar2 = quadrature_variances(moments(state, scheme))
        for got, want, tag in (
            (var1, mvar1, "var1"),
            (var2, mvar2, "var2"),
            (product, mvar1 * mvar2, "product"),
        ):
            if abs(got - want) > 1e-10:
                failures.append(f"thermal q={q} theta={theta} {tag}: {abs(got - want):.3e}")
    for xi in XI_VALUES:
        _, _, product = squeezed_variances_closed(1.0, xi)
        if abs(product - 1.0 / 16.0) > 1e-10:
            failures.append(f"squeezed q=1 xi={xi}: product {product!r}")
    for theta in THETA_VALUES:
        _, _, product = thermal_variances_closed(theta, 1.0 / math.expm1(theta))
        if abs(product - 1.0 / 16.0) > 1e-10:
            failures.append(f"thermal q=1 theta={theta}: product {product!r}")
    _verdict("criterion 4: variance closed forms match moment oracle within 1e-10", failures)


def test_criterion_5_exponent_sign_adjudication():
    failures = []
    schemes = [DeformationScheme.undeformed()]
    schemes += [DeformationScheme.biedenharn_macfarlane(q) for q in Q_GRID]
    schemes += [
        DeformationScheme.custom(BM_TEXT, 2.0),
        DeformationScheme.custom("n*(3+n)/4", 1.0),
    ]
    for scheme in schemes:
        qhat = max(scheme.q, 1.0 / scheme.q) if scheme.kind != "undeformed" else 1.0
        for theta in THERMAL_THETAS:
            ratio = math.exp(-theta)
            if scheme.kind == "biedenharn-macfarlane" and qhat * ratio >= 1.0:
                continue
            if scheme.label == BM_TEXT and qhat * ratio >= 1.0:
                continue
            m = moments(geometric_state(scheme, ratio, 1e-14), scheme)
            up = m.a_adag / m.adag_a
            half = m.a_atilde / m.adag_a
            if abs(up - math.exp(theta)) > 1e-10:
                failures.append(f"{scheme.label} theta={theta}: <a a+>/<a+ a> = {up!r}")
            if abs(half - math.exp(0.5 * theta)) > 1e-10:
                failures.append(f"{scheme.label} theta={theta}: <a a~>/<a+ a> = {half!r}")
    _verdict("criterion 5: thermal moment ratios e^theta, e^(theta/2) within 1e-10", failures)


def test_criterion_6_entropy():
    failures = []
    plain = DeformationScheme.undeformed()
    for xi in XI_VALUES:
        probs = squeezed_probabilities(SqueezedSpec(xi=xi, scheme=plain))
        closed = entanglement_entropy_closed(xi)
        series = shannon_entropy_bits(probs)
        reduced = reduced_entropy_bits(from_probabilities(probs, 1e-12))
        if abs(closed - series) > 1e-8:
            failures.append(f"squeezed xi={xi}: closed vs shannon {abs(closed - series):.3e}")
        if abs(series - reduced) > 1e-12:
            failures.append(f"squeezed xi={xi}: shannon vs reduced {abs(series - reduced):.3e}")
    for theta in THETA_VALUES:
        probs = thermal_probabilities(ThermalSpec(theta=theta, scheme=plain))
        closed = thermal_entropy_bits(theta)
        series = shannon_entropy_bits(probs)
        reduced = reduced_entropy_bits(from_probabilities(probs, 1e-12))
        if abs(closed - series) > 1e-8:
            failures.append(f"thermal theta={theta}: closed vs shannon {abs(closed - series):.3e}")
        if abs(series - reduced) > 1e-12:
            failures.append(f"thermal theta={theta}: shannon vs reduced {abs(series - reduced):.3e}")
    # deformation independence: byte-identical probability sequences across q
    for xi in XI_VALUES:
        seqs = [
            squeezed_probabilities(
                SqueezedSpec(xi=xi, scheme=DeformationScheme.biedenharn_macfarlane(q))
            )
            for q in (0.5, 1.0, 2.0)
        ]
        if not (seqs[0] == seqs[1] == seqs[2]):
            failures.append(f"squeezed xi={xi}: law depends on q")
    for theta in THETA_VALUES:
        seqs = [
            thermal_probabilities(
                ThermalSpec(theta=theta, scheme=DeformationScheme.biedenharn_macfarlane(q))
            )
            for q in (0.5, 1.0, 2.0)
        ]
        if not (seqs[0] == seqs[1] == seqs[2]):
            failures.append(f"thermal theta={theta}: law depends on q")
    _verdict("criterion 6: entropy closed/series/reduced agreement and q-independence", failures)


def test_criterion_7_squeezed_thermal_correspondence():
    failures = []
    thetas = [0.5, 1.0, 2.5]
    xis = [math.atanh(math.sqrt(math.exp(-t))) for t in thetas]
    for descriptor, q in (("undeformed", 1.0), ("bm", 1.25)):
        sq_rows = run_sweep(
            SweepSpec(
                family="squeezed",
                scheme=descriptor,
                q_values=(q,),
                param_values=tuple(xis),
            )
        )
        th_rows = run_sweep(
            SweepSpec(
                family="thermal",
                scheme=descriptor,
                q_values=(q,),
                param_values=tuple(thetas),
            )
        )
        for sq, th, theta in zip(sq_rows, th_rows, thetas):
            pairs = [
                ("nbar", sq.nbar_series, th.nbar_series),
                ("var1", sq.var1, th.var1),
                ("var2", sq.var2, th.var2),
                ("product", sq.product, th.product),
                ("entropy_closed", sq.entropy_closed, th.entropy_closed),
                ("entropy_series", sq.entropy_series, th.entropy_series),
            ]
            for tag, a, b in pairs:
                if a is None or b is None or abs(a - b) > 1e-12:
                    failures.append(f"{descriptor} theta={theta} {tag}: {a!r} vs {b!r}")
    _verdict("criterion 7: squeezed/thermal rows agree under tanh^2 xi = e^-theta", failures)


def test_criterion_8_parser(capsys):
    failures = []
    tree = parse_deformation(BM_TEXT)
    from qfock import evaluate_tree

    for q in (0.5, 2.0):
        for n in range(65):
            got = evaluate_tree(tree, q, float(n))
            want = bm_reference(q, n)
            if not close(got, want, 1e-12):
                failures.append(f"q={q} n={n}: {got!r} vs {want!r}")
    malformed = [
        "q + ",
        "(q",
        "n n",
        "2 +* 3",
        "q^",
        ")",
        "",
        "x",
        "foo(n)",
        "q−n",
    ]
    for source in malformed:
        try:
            parse_deformation(source)
            failures.append(f"accepted malformed {source!r}")
        except ExpressionError as exc:
            if not isinstance(exc.position, int):
                failures.append(f"no position for {source!r}")
        code = main(["parse", source])
        err = capsys.readouterr().err
        if code != 1:
            failures.append(f"exit {code} for {source!r}")
        if "position" not in err:
            failures.append(f"no positioned message for {source!r}")
    _verdict("criterion 8: parser reproduces the built-in law and rejects bad input", failures)


def test_criterion_9_cli_determinism(tmp_path):
    failures = []
    args = [
        "sweep",
        "squeezed",
        "--scheme",
        "bm",
        "--q",
        "0.5,1,2",
        "--xi",
        "0.1,1,2",
        "--tail-tol",
        "1e-12",
    ]
    out1 = tmp_path / "first.csv"
    out2 = tmp_path / "second.csv"
    if main(args + ["--out", str(out1)]) != 0:
        failures.append("first run failed")
    if main(args + ["--out", str(out2)]) != 0:
        failures.append("second run failed")
    if out1.read_bytes() != out2.read_bytes():
        failures.append("CSV output differs between identical runs")
    _verdict("criterion 9: byte-identical CSV across runs", failures)

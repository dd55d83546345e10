"""Command-line front end.

Subcommands:
  coeff     evaluate all five disentangling coefficients at one (u, v)
  cn-table  compare closed-form and recurrence product coefficients
  verify    run the full identity suite on a built-in or file-given pair
  sweep     grid a single check over a (u, v) lattice into a CSV file
  integral  compare the quadrature route against the closed form

Numeric output uses 17 significant digits in JSON/CSV (round-trip exact
for doubles) and 6 in human-readable text.  Identical invocations produce
byte-identical output.  Exit codes: 0 when every executed check passed,
1 when a check failed, 2 on argument errors.
"""

from __future__ import annotations

import argparse
import csv
import json
import math
import os
import sys

import numpy as np

from .coeffs import PoleError, f_bch, g_center, g_left, g_right, gamma_swap, zass_coeff
from .matrices import DimensionMismatch, commutator, infer_uvc, load_matrix
from .realizations import (
    AlgebraPair,
    Ladder,
    affine_2x2,
    heisenberg_3x3,
    lindblad_pair,
    su11_pair,
)
from .recurrence import c_from_recurrence
from .verify import (
    DEFAULT_TOL,
    Side,
    check_ab_structure,
    check_bch,
    check_disentangle,
    check_hadamard,
    check_integral,
    check_swap,
    check_truncated_product,
    quadrature_gr,
    report_to_jsonable,
    run_suite,
)

__all__ = ["main"]

# File-supplied pairs are refused when the commutator fit is worse than
# this: the identities are only meaningful inside the affine class.
_FIT_LIMIT = 1e-8

_PAIR_BUILDERS = {
    "affine2": lambda: affine_2x2(1, 2, 1, 1),
    "heisenberg3": lambda: heisenberg_3x3(1),
    "su11-raise": lambda: su11_pair(Ladder.RAISE_SQ, 8),
    "su11-lower": lambda: su11_pair(Ladder.LOWER_SQ, 8),
    "lindblad": lindblad_pair,
}

_SWEEP_CHECKS = {
    "disentangle-right": lambda p: check_disentangle(p, Side.RIGHT),
    "disentangle-center": lambda p: check_disentangle(p, Side.CENTER),
    "disentangle-left": lambda p: check_disentangle(p, Side.LEFT),
    "swap": check_swap,
    "bch": check_bch,
    "ab-structure": check_ab_structure,
    "integral": check_integral,
    "product": lambda p: check_truncated_product(p, 30),
    "hadamard": lambda p: check_hadamard(p, 0.5, 40),
}


def _fmt_float(x: float, digits: int) -> str:
    if math.isnan(x):
        return "nan"
    if math.isinf(x):
        return "inf" if x > 0 else "-inf"
    return f"{x:.{digits}g}"


def _fmt_complex(z: complex, digits: int) -> str:
    z = complex(z)
    if z.imag == 0.0:
        return _fmt_float(z.real, digits)
    sign = "+" if (z.imag > 0 or math.isnan(z.imag)) else "-"
    return f"{_fmt_float(z.real, digits)}{sign}{_fmt_float(abs(z.imag), digits)}i"


def _json_text(obj) -> str:
    """Serialize with 17-significant-digit floats and stable key order.

    Non-finite floats become the strings "inf"/"-inf"/"nan" (strict JSON
    has no literal for them).
    """
    pieces: list[str] = []

    def emit(node, indent: int) -> None:
        pad = " " * indent
        if isinstance(node, dict):
            if not node:
                pieces.append("{}")
                return
            pieces.append("{\n")
            for i, (key, value) in enumerate(node.items()):
                pieces.append(f"{pad}  {json.dumps(str(key))}: ")
                emit(value, indent + 2)
                pieces.append(",\n" if i < len(node) - 1 else "\n")
            pieces.append(pad + "}")
        elif isinstance(node, (list, tuple)):
            if not node:
                pieces.append("[]")
                return
            pieces.append("[\n")
            for i, value in enumerate(node):
                pieces.append(pad + "  ")
                emit(value, indent + 2)
                pieces.append(",\n" if i < len(node) - 1 else "\n")
            pieces.append(pad + "]")
        elif isinstance(node, bool):
            pieces.append("true" if node else "false")
        elif isinstance(node, float):
            if math.isfinite(node):
                pieces.append(f"{node:.17g}")
            else:
                pieces.append(json.dumps(_fmt_float(node, 17)))
        elif isinstance(node, int):
            pieces.append(str(node))
        elif node is None:
            pieces.append("null")
        else:
            pieces.append(json.dumps(str(node)))

    emit(obj, 0)
    return "".join(pieces)


def _complex_jsonable(z: complex) -> dict:
    return {"re": complex(z).real, "im": complex(z).imag}


def _cmd_coeff(args: argparse.Namespace) -> int:
    u = complex(args.u, args.u_im)
    v = complex(args.v, args.v_im)
    table = []
    for label, fn in (
        ("g_right", g_right),
        ("g_center", g_center),
        ("g_left", g_left),
        ("f_bch", f_bch),
        ("gamma_swap", gamma_swap),
    ):
        try:
            table.append((label, fn(u, v)))
        except PoleError as exc:
            table.append((label, exc))
    if args.format == "json":
        coefficients = {}
        for label, cv in table:
            if isinstance(cv, PoleError):
                coefficients[label] = {"pole": str(cv)}
            else:
                coefficients[label] = {
                    "value": _complex_jsonable(cv.value),
                    "method": cv.method.value,
                    "terms_used": cv.terms_used,
                }
        payload = {
            "u": _complex_jsonable(u),
            "v": _complex_jsonable(v),
            "coefficients": coefficients,
        }
        print(_json_text(payload))
    else:
        print(f"coefficients at u = {_fmt_complex(u, 6)}, v = {_fmt_complex(v, 6)}")
        for label, cv in table:
            if isinstance(cv, PoleError):
                print(f"  {label:10s}  pole ({cv})")
            else:
                print(
                    f"  {label:10s}  {_fmt_complex(cv.value, 6):>22s}"
                    f"  method={cv.method.value}  terms_used={cv.terms_used}"
                )
    return 0


def _cmd_cn_table(args: argparse.Namespace) -> int:
    u = float(args.u)
    v = float(args.v)
    print(f"product coefficients C_n at u = {_fmt_float(u, 6)}, v = {_fmt_float(v, 6)}")
    print(f"{'n':>3s}  {'closed form':>22s}  {'recurrence':>22s}  {'|difference|':>13s}")
    for n in range(2, args.max_n + 1):
        closed = zass_coeff(n, u, v)
        recur = c_from_recurrence(n, u, v)
        print(
            f"{n:>3d}  {_fmt_complex(closed, 6):>22s}  "
            f"{_fmt_complex(recur, 6):>22s}  {_fmt_float(abs(closed - recur), 6):>13s}"
        )
    return 0


def _pair_from_files(x_path: str, y_path: str):
    """Load and vet a file-supplied pair; returns (pair, error_message)."""
    try:
        X = load_matrix(x_path)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        return None, f"--x: {exc}"
    try:
        Y = load_matrix(y_path)
    except (OSError, ValueError, json.JSONDecodeError) as exc:
        return None, f"--y: {exc}"
    if X.shape != Y.shape:
        return None, (
            f"--x/--y: dimension mismatch, {X.shape[0]} vs {Y.shape[0]}"
        )
    u, v, c, fit = infer_uvc(X, Y)
    if fit > _FIT_LIMIT:
        return None, (
            "--x/--y: [X,Y] does not lie in span{X, Y, identity}: "
            f"fit_residual = {_fmt_float(fit, 6)} exceeds {_FIT_LIMIT:g}"
        )
    name = f"file({os.path.basename(x_path)},{os.path.basename(y_path)})"
    pair = AlgebraPair(X, Y, u, v, c, commutator(X, Y), name)
    return pair, None


def _print_report_text(report) -> None:
    print(f"pair: {report.pair_name}")
    for r in report.results:
        status = "PASS" if r.passed else "FAIL"
        line = (
            f"  {r.name:22s} residual {_fmt_float(r.residual, 6):>12s}"
            f"   tol {_fmt_float(r.tolerance, 6):>8s}   {status}"
        )
        if "error" in r.metadata:
            line += f"   ({r.metadata['error']})"
        print(line)
    print(f"all passed: {'yes' if report.all_passed else 'no'}")


def _cmd_verify(args: argparse.Namespace) -> int:
    if args.pair is not None:
        pair = _PAIR_BUILDERS[args.pair]()
    else:
        pair, error = _pair_from_files(args.x, args.y)
        if error is not None:
            print(f"error: {error}", file=sys.stderr)
            return 2
    report = run_suite(pair, args.tol)
    if args.format == "json":
        print(_json_text(report_to_jsonable(report)))
    else:
        _print_report_text(report)
    return 0 if report.all_passed else 1


def _lattice_pair(u: float, v: float):
    """Exact realization for one lattice point of a sweep.

    affine_2x2(u, v, 1, 1) except where u + v = 0 makes it degenerate:
    then b = 1, d = -1 (nonzero since u = -v != 0), and the origin falls
    back to the central 3x3 pair.
    """
    if u == 0.0 and v == 0.0:
        return heisenberg_3x3(1)
    if u + v != 0.0:
        return affine_2x2(u, v, 1, 1)
    return affine_2x2(u, v, 1, -1)


def _cmd_sweep(args: argparse.Namespace) -> int:
    check_fn = _SWEEP_CHECKS[args.check]
    us = np.linspace(args.u_min, args.u_max, args.steps)
    vs = np.linspace(args.v_min, args.v_max, args.steps)
    rows = []
    failures = 0
    for u in us:
        for v in vs:
            try:
                result = check_fn(_lattice_pair(float(u), float(v)))
                residual, passed = result.residual, result.passed
            except Exception:  # noqa: BLE001 - a sweep row must never abort the grid
                residual, passed = math.inf, False
            if not passed:
                failures += 1
            rows.append((float(u), 0.0, float(v), 0.0, residual, passed))
    with open(args.out, "w", newline="", encoding="utf-8") as fh:
        writer = csv.writer(fh)
        writer.writerow(["u_re", "u_im", "v_re", "v_im", "residual", "passed"])
        for u_re, u_im, v_re, v_im, residual, passed in rows:
            writer.writerow(
                [
                    _fmt_float(u_re, 17),
                    _fmt_float(u_im, 17),
                    _fmt_float(v_re, 17),
                    _fmt_float(v_im, 17),
                    _fmt_float(residual, 17),
                    "true" if passed else "false",
                ]
            )
    print(
        f"sweep {args.check}: wrote {len(rows)} rows to {args.out}; "
        f"failures: {failures}"
    )
    return 0 if failures == 0 else 1


def _cmd_integral(args: argparse.Namespace) -> int:
    u = float(args.u)
    v = float(args.v)
    i32 = quadrature_gr(u, v, 32)
    i16 = quadrature_gr(u, v, 16)
    cv = g_right(u, v)
    diff = abs(i32 - cv.value)
    threshold = DEFAULT_TOL * (1.0 + abs(cv.value))
    passed = diff <= threshold
    print(f"integral of the interaction integrand at u = {_fmt_float(u, 6)}, v = {_fmt_float(v, 6)}")
    print(f"  quadrature, 32 nodes   {_fmt_complex(i32, 6):>22s}")
    print(f"  quadrature, 16 nodes   {_fmt_complex(i16, 6):>22s}")
    print(f"  node-refinement delta  {_fmt_float(abs(i32 - i16), 6):>22s}")
    print(
        f"  closed form g_right    {_fmt_complex(cv.value, 6):>22s}"
        f"  method={cv.method.value}  terms_used={cv.terms_used}"
    )
    print(f"  |quadrature - closed|  {_fmt_float(diff, 6):>22s}")
    print(
        f"  agreement: {'PASS' if passed else 'FAIL'} "
        f"(threshold {_fmt_float(threshold, 6)})"
    )
    return 0 if passed else 1


def _positive_float(text: str) -> float:
    value = float(text)
    if not value > 0:
        raise argparse.ArgumentTypeError(f"must be positive, got {text}")
    return value


def _steps_int(text: str) -> int:
    value = int(text)
    if value < 1:
        raise argparse.ArgumentTypeError(f"must be >= 1, got {text}")
    return value


def _max_n_int(text: str) -> int:
    value = int(text)
    if value < 2:
        raise argparse.ArgumentTypeError(f"must be >= 2, got {text}")
    return value


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="zassenhaus",
        description=(
            "Disentangle operator exponentials for the commutator class "
            "[X,Y] = uX + vY + c*identity and verify every identity on "
            "exact matrix realizations."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_coeff = sub.add_parser(
        "coeff", help="evaluate the five disentangling coefficients at (u, v)"
    )
    p_coeff.add_argument("--u", type=float, required=True, help="real part of u")
    p_coeff.add_argument("--u-im", type=float, default=0.0, help="imaginary part of u")
    p_coeff.add_argument("--v", type=float, required=True, help="real part of v")
    p_coeff.add_argument("--v-im", type=float, default=0.0, help="imaginary part of v")
    p_coeff.add_argument("--format", choices=("text", "json"), default="text")
    p_coeff.set_defaults(func=_cmd_coeff)

    p_cn = sub.add_parser(
        "cn-table",
        help="closed-form vs recurrence product coefficients C_n for n = 2..max-n",
    )
    p_cn.add_argument("--u", type=float, required=True)
    p_cn.add_argument("--v", type=float, required=True)
    p_cn.add_argument("--max-n", type=_max_n_int, required=True)
    p_cn.set_defaults(func=_cmd_cn_table)

    p_verify = sub.add_parser(
        "verify", help="run the identity suite on a named pair or matrix files"
    )
    source = p_verify.add_mutually_exclusive_group(required=True)
    source.add_argument("--pair", choices=sorted(_PAIR_BUILDERS), help="built-in pair")
    source.add_argument("--x", help="JSON matrix file for X (requires --y)")
    p_verify.add_argument("--y", help="JSON matrix file for Y")
    p_verify.add_argument(
        "--tol",
        type=_positive_float,
        default=None,
        help="residual tolerance (default 1e-10, auto-relaxed for large norms)",
    )
    p_verify.add_argument("--format", choices=("text", "json"), default="text")
    p_verify.set_defaults(func=_cmd_verify)

    p_sweep = sub.add_parser(
        "sweep", help="run one check over a real (u, v) lattice, writing CSV"
    )
    p_sweep.add_argument("--check", choices=sorted(_SWEEP_CHECKS), required=True)
    p_sweep.add_argument("--u-min", type=float, required=True)
    p_sweep.add_argument("--u-max", type=float, required=True)
    p_sweep.add_argument("--v-min", type=float, required=True)
    p_sweep.add_argument("--v-max", type=float, required=True)
    p_sweep.add_argument("--steps", type=_steps_int, required=True, help="points per axis")
    p_sweep.add_argument("--out", required=True, help="output CSV path")
    p_sweep.set_defaults(func=_cmd_sweep)

    p_integral = sub.add_parser(
        "integral", help="quadrature vs closed form for the right coefficient"
    )
    p_integral.add_argument("--u", type=float, required=True)
    p_integral.add_argument("--v", type=float, required=True)
    p_integral.set_defaults(func=_cmd_integral)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "verify":
        if args.pair is None and args.y is None:
            parser.error("--x requires --y")
        if args.pair is not None and args.y is not None:
            parser.error("--y cannot be combined with --pair")
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())

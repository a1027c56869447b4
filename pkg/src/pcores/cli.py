"""Command-line interface.

Subcommands map onto the library: exact counts and series, asymptotic
estimates, the leading constant, character sums, class numbers, and the
verify family of identity checks.  Every command renders a single result
envelope {command, parameters, precision, values, residuals, pass} as
text, JSON, or CSV, written to stdout in one atomic write.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 precision failure.  Big integers and high-precision reals are rendered
as decimal strings so output is exact and byte-identical across runs.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import os
import sys
from fractions import Fraction

from . import cache
from .arith import is_prime
from .asympt import (TransformCase, approx_divisor_sum, approx_singular_series,
                     bernoulli_char_sum, class_number, cotangent_char_sum,
                     divisibility_scan, leading_constant,
                     leading_constant_report, verify_dedekind_parity,
                     verify_dirichlet_series, verify_eta_transform,
                     verify_quadratic_trig_identity, verify_ramanujan_identity,
                     VARIANTS, CLASS_NUMBER_METHODS)
from .fourier import verify_transform_table
from .precision import PrecisionConfig, PrecisionError, VerificationError
from .series import pcore_count, pcore_series

DEFAULT_DIGITS = 60
PRECISION_ENV = "PCORE_PREC"


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--prec", type=int, default=None, metavar="DIGITS",
                        help="working decimal digits (default: "
                             f"${PRECISION_ENV} or {DEFAULT_DIGITS})")
    common.add_argument("--format", choices=("text", "json", "csv"),
                        default="text", help="output format (default: text)")
    common.add_argument("--cache", default=None, metavar="PATH",
                        help="append-only JSON-lines result cache")

    parser = argparse.ArgumentParser(
        prog="pcore",
        description="p-core partition counts, circle-method asymptotics, "
                    "and identity verification")
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("count", parents=[common],
                        help="exact number of p-core partitions of n")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)

    sp = sub.add_parser("series", parents=[common],
                        help="all p-core counts for n = 0..max-n")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--max-n", type=int, required=True, dest="max_n")

    sp = sub.add_parser("approx", parents=[common],
                        help="asymptotic estimate of the count")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--method", choices=("singular", "divisor"), required=True)
    sp.add_argument("--kmax", type=int, default=None,
                    help="singular-series truncation (default: 50)")

    sp = sub.add_parser("cp", parents=[common],
                        help="leading constant of the divisor-sum estimate")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--variant", choices=VARIANTS + ("all",), default="all")

    sp = sub.add_parser("trig", parents=[common],
                        help="Bernoulli and cotangent character sums")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)

    sp = sub.add_parser("classnum", parents=[common],
                        help="class number h(-p) for p = 3 mod 4")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--method", choices=CLASS_NUMBER_METHODS + ("all",),
                    default="all")

    vp = sub.add_parser("verify", help="machine checks of the identities")
    vsub = vp.add_subparsers(dest="check", required=True)

    sp = vsub.add_parser("ramanujan-identity", parents=[common],
                         help="exponential sums vs Ramanujan sums")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--kmax", type=int, default=30)
    sp.add_argument("--nmax", type=int, default=30)

    sp = vsub.add_parser("dedekind-parity", parents=[common],
                         help="integrality and parity of Dedekind-sum deltas")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--kmax", type=int, default=60)

    sp = vsub.add_parser("dirichlet-series", parents=[common],
                         help="twisted divisor Dirichlet series closed form")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--s", type=int, default=2)
    sp.add_argument("--n", type=int, default=1)
    sp.add_argument("--kmax", type=int, default=10000)

    sp = vsub.add_parser("eta-transform", parents=[common],
                         help="modular transformation of the core product")
    sp.add_argument("--p", type=int, default=5)
    sp.add_argument("--h", type=int, default=1)
    sp.add_argument("--k", type=int, default=2)
    sp.add_argument("--t", type=float, default=0.5)
    sp.add_argument("--factors", type=int, default=400)
    sp.add_argument("--tolerance", type=float, default=1e-12)

    sp = vsub.add_parser("fft", parents=[common],
                         help="finite Fourier transform table")
    sp.add_argument("--kmax", type=int, default=13)
    sp.add_argument("--rmax", type=int, default=6)
    sp.add_argument("--smax", type=int, default=6)
    sp.add_argument("--pmax", type=int, default=97)
    sp.add_argument("--grids", type=int, default=100)
    sp.add_argument("--grid-kmax", type=int, default=64, dest="grid_kmax")

    sp = vsub.add_parser("trig-identity", parents=[common],
                         help="quadratic-argument cotangent identity")
    sp.add_argument("--r", type=int, required=True)
    sp.add_argument("--p", type=int, required=True)

    sp = vsub.add_parser("divisibility", parents=[common],
                         help="divisibility pattern of Bernoulli sums")
    sp.add_argument("--p", type=int, required=True)
    sp.add_argument("--rmax", type=int, default=None)

    return parser


def _resolve_precision(args) -> PrecisionConfig:
    digits = args.prec
    if digits is None:
        raw = os.environ.get(PRECISION_ENV)
        if raw is not None:
            raw = raw.strip()
            sign_ok = raw[1:].isdigit() if raw[:1] in "+-" else raw.isdigit()
            if not raw or not sign_ok:
                raise ValueError(
                    f"{PRECISION_ENV} must be an integer, got {raw!r}")
            digits = int(raw)
    if digits is None:
        digits = DEFAULT_DIGITS
    return PrecisionConfig.for_digits(digits)


def _number_str(value, config: PrecisionConfig) -> str:
    """Exact decimal for integers and Fractions, nstr for mp values."""
    if isinstance(value, bool):
        return "true" if value else "false"
    if isinstance(value, int):
        return str(value)
    if isinstance(value, Fraction):
        if value.denominator == 1:
            return str(value.numerator)
        return f"{value.numerator}/{value.denominator}"
    ctx = config.context()
    return ctx.nstr(ctx.convert(value), config.decimal_digits)


def _require_prime(p: int) -> None:
    if p < 2 or not is_prime(p):
        raise ValueError(f"p must be prime, got {p}")


def _prepare(args, config: PrecisionConfig):
    """Return (command id, parameters, compute closure) for the parsed args.

    The closure returns (values, residuals, passed) with every value
    already JSON-serializable, so envelopes cache and render identically.
    """
    if args.command == "count":
        _require_prime(args.p)
        if args.n < 0:
            raise ValueError("n must be >= 0")
        parameters = {"p": args.p, "n": args.n}

        def compute():
            return {"count": str(pcore_count(args.p, args.n))}, {}, True

        return "count", parameters, compute

    if args.command == "series":
        _require_prime(args.p)
        if args.max_n < 0:
            raise ValueError("max-n must be >= 0")
        parameters = {"p": args.p, "max_n": args.max_n}

        def compute():
            coeffs = pcore_series(args.p, args.max_n).coefficients
            counts = [[n, str(c)] for n, c in enumerate(coeffs)]
            return {"counts": counts}, {}, True

        return "series", parameters, compute

    if args.command == "approx":
        parameters = {"p": args.p, "n": args.n, "method": args.method}
        if args.method == "singular":
            parameters["kmax"] = args.kmax if args.kmax is not None else 50

        def compute():
            if args.method == "singular":
                report = approx_singular_series(
                    args.p, args.n, parameters["kmax"], config)
            else:
                report = approx_divisor_sum(args.p, args.n, config)
            values = {"estimate": _number_str(report.estimate, config)}
            if report.divisor_sum is not None:
                values["divisor_sum"] = str(report.divisor_sum)
                values["constant"] = str(report.constant)
            residuals = {}
            if report.exact is not None:
                values["exact"] = str(report.exact)
                if report.relative_error is not None:
                    residuals["relative_error"] = report.relative_error
            return values, residuals, True

        return "approx", parameters, compute

    if args.command == "cp":
        parameters = {"p": args.p, "variant": args.variant}

        def compute():
            if args.variant == "all":
                report = leading_constant_report(args.p, config)
                values = {
                    "consensus": str(report.consensus),
                    "values": {name: _number_str(v, config)
                               for name, v in report.values.items()},
                    "signs": report.signs,
                }
                return values, dict(report.residuals), True
            value = leading_constant(args.p, args.variant, config)
            return {"variant": args.variant,
                    "value": _number_str(value, config)}, {}, True

        return "cp", parameters, compute

    if args.command == "trig":
        parameters = {"r": args.r, "p": args.p}

        def compute():
            exact = bernoulli_char_sum(args.r, args.p)
            snapped = cotangent_char_sum(args.r, args.p, config)
            passed = exact.denominator == 1 and snapped.nearest == exact
            values = {"bernoulli_sum": _number_str(exact, config),
                      "cotangent_sum": str(snapped.nearest)}
            return values, {"snap": snapped.residual}, passed

        return "trig", parameters, compute

    if args.command == "classnum":
        parameters = {"p": args.p, "method": args.method}

        def compute():
            value = class_number(args.p, args.method, config)
            return {"class_number": str(value),
                    "method": args.method}, {}, True

        return "classnum", parameters, compute

    # verify family
    check = args.check
    if check == "ramanujan-identity":
        parameters = {"p": args.p, "kmax": args.kmax, "nmax": args.nmax}

        def compute():
            report = verify_ramanujan_identity(
                args.p, args.kmax, args.nmax, config)
            values = {"checked": report.checked,
                      "counterexamples": report.counterexamples}
            return values, {"worst": report.worst_residual}, report.passed

        return "verify ramanujan-identity", parameters, compute

    if check == "dedekind-parity":
        parameters = {"p": args.p, "kmax": args.kmax}

        def compute():
            report = verify_dedekind_parity(args.p, args.kmax)
            values = {"checked": report.checked,
                      "counterexamples": report.counterexamples}
            return values, {}, report.passed

        return "verify dedekind-parity", parameters, compute

    if check == "dirichlet-series":
        parameters = {"p": args.p, "s": args.s, "n": args.n,
                      "kmax": args.kmax}

        def compute():
            report = verify_dirichlet_series(
                args.p, args.s, args.n, args.kmax, config)
            values = {"partial_sum": _number_str(report.partial_sum, config),
                      "closed_form": _number_str(report.closed_form, config),
                      "tail_bound": report.tail_bound,
                      "tolerance": report.tolerance}
            return values, {"deviation": report.deviation}, report.passed

        return "verify dirichlet-series", parameters, compute

    if check == "eta-transform":
        parameters = {"p": args.p, "h": args.h, "k": args.k, "t": args.t,
                      "factors": args.factors, "tolerance": args.tolerance}

        def compute():
            case = TransformCase(p=args.p, h=args.h, k=args.k, t=args.t,
                                 factors=args.factors)
            report = verify_eta_transform(case, config, args.tolerance)
            values = {
                "lhs": _number_str(report.lhs, config),
                "rhs": _number_str(report.rhs, config),
                "exponent": report.exponent,
                "truncation_bound": report.truncation_bound,
                "alt_exponent_deviation": report.alt_exponent_deviation,
                "tolerance": report.tolerance,
            }
            residuals = {"relative_deviation": report.relative_deviation}
            return values, residuals, report.passed

        return "verify eta-transform", parameters, compute

    if check == "fft":
        parameters = {"kmax": args.kmax, "rmax": args.rmax,
                      "smax": args.smax, "pmax": args.pmax,
                      "grids": args.grids, "grid_kmax": args.grid_kmax}

        def compute():
            table = verify_transform_table(
                kmax=args.kmax, rmax=args.rmax, smax=args.smax,
                pmax=args.pmax, grids=args.grids,
                grid_kmax=args.grid_kmax, config=config)
            failures = [{"name": row.name, "k": row.k,
                         "parameters": row.parameters,
                         "deviation": row.max_deviation}
                        for row in table.rows if not row.passed]
            values = {"rows_checked": len(table.rows),
                      "row_failures": failures,
                      "max_row_deviation": table.max_row_deviation,
                      "parseval_max": table.parseval_max,
                      "involution_max": table.involution_max,
                      "grid_tolerance": table.grid_tolerance,
                      "grids": table.grids}
            return values, {}, table.passed

        return "verify fft", parameters, compute

    if check == "trig-identity":
        parameters = {"r": args.r, "p": args.p}

        def compute():
            report = verify_quadratic_trig_identity(args.r, args.p, config)
            values = {"cotangent_side": str(report.lhs.nearest),
                      "bernoulli_side": _number_str(report.rhs, config),
                      "relative_sign": report.relative_sign,
                      "magnitude_match": report.magnitude_match}
            return values, {"snap": report.lhs.residual}, report.passed

        return "verify trig-identity", parameters, compute

    if check == "divisibility":
        rmax = args.rmax
        if rmax is None:
            first = args.p * (args.p - 1) // 2 - 1
            rmax = first if first <= 100 else 15
        parameters = {"p": args.p, "rmax": rmax}

        def compute():
            report = divisibility_scan(args.p, rmax)
            rows = [{"r": row.r, "integer": row.is_integer,
                     "zero": row.is_zero, "exempt": row.exempt,
                     "divisible": row.divisible}
                    for row in report.rows]
            values = {"first_non_integer": report.first_non_integer,
                      "expected_first_non_integer":
                          report.expected_first_non_integer,
                      "divisibility_holds": report.divisibility_holds,
                      "first_failure_holds": report.first_failure_holds,
                      "rows": rows}
            return values, {}, report.passed

        return "verify divisibility", parameters, compute

    raise ValueError(f"unknown command {args.command!r}")


def _plain(value) -> str:
    if isinstance(value, bool):
        return "true" if value else "false"
    if value is None:
        return "none"
    if isinstance(value, (dict, list)):
        return json.dumps(value, sort_keys=True, separators=(",", ":"))
    return str(value)


def _render_text(envelope: dict) -> str:
    lines = [f"command: {envelope['command']}"]
    parameters = envelope["parameters"]
    if parameters:
        lines.append("parameters: " + " ".join(
            f"{key}={_plain(parameters[key])}" for key in sorted(parameters)))
    lines.append(f"precision: {envelope['precision']}")
    if envelope["command"] == "series":
        for n, count in envelope["values"]["counts"]:
            lines.append(f"{n} {count}")
    else:
        for key, value in envelope["values"].items():
            lines.append(f"{key}: {_plain(value)}")
    for key, value in envelope["residuals"].items():
        lines.append(f"residual {key}: {_plain(value)}")
    lines.append("pass: " + ("true" if envelope["pass"] else "false"))
    return "\n".join(lines) + "\n"


def _render_csv(envelope: dict) -> str:
    buffer = io.StringIO()
    writer = csv.writer(buffer, lineterminator="\n")
    if envelope["command"] == "series":
        writer.writerow(["n", "count"])
        for n, count in envelope["values"]["counts"]:
            writer.writerow([n, count])
        return buffer.getvalue()
    writer.writerow(["key", "value"])
    for key, value in envelope["values"].items():
        writer.writerow([key, _plain(value)])
    for key, value in envelope["residuals"].items():
        writer.writerow([f"residual_{key}", _plain(value)])
    writer.writerow(["pass", "true" if envelope["pass"] else "false"])
    return buffer.getvalue()


def _render(envelope: dict, fmt: str) -> str:
    if fmt == "json":
        return json.dumps(envelope, indent=2, sort_keys=True) + "\n"
    if fmt == "csv":
        return _render_csv(envelope)
    return _render_text(envelope)


def _execute(args, config: PrecisionConfig):
    command, parameters, compute = _prepare(args, config)
    envelope = None
    key = None
    if args.cache:
        key = cache.cache_key(command, parameters, config.decimal_digits)
        envelope = cache.load(args.cache).get(key)
    if envelope is None:
        values, residuals, passed = compute()
        envelope = {"command": command, "parameters": parameters,
                    "precision": config.decimal_digits, "values": values,
                    "residuals": residuals, "pass": passed}
        if args.cache:
            cache.append(args.cache, key, envelope)
    return envelope


def _emit_error(kind: str, exc: Exception) -> None:
    line = json.dumps({"error": kind, "message": str(exc)}, sort_keys=True)
    sys.stderr.write(line + "\n")


def run_cli(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # argparse handles usage errors and --help
        return int(exc.code or 0)
    try:
        config = _resolve_precision(args)
        envelope = _execute(args, config)
    except VerificationError as exc:
        _emit_error("verification", exc)
        return 1
    except PrecisionError as exc:
        _emit_error("precision", exc)
        return 3
    except ValueError as exc:
        _emit_error("usage", exc)
        return 2
    sys.stdout.write(_render(envelope, args.format))
    sys.stdout.flush()
    return 0 if envelope["pass"] else 1


def main(argv=None) -> int:
    return run_cli(argv)


if __name__ == "__main__":
    sys.exit(main())

"""Command-line interface.

Exit codes: 0 success, 1 numerical failure (non-convergence or residual
above tolerance), 2 usage error.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import os
import sys
import tempfile
from dataclasses import asdict, dataclass

from . import __version__
from .exact_core import EULER_GAMMA, estimate_gamma, harmonic_asymptotic, harmonic_exact, harmonic_float
from .identity_verifier import IdentityParams, harmonic_via_euler, harmonic_via_integrals, verify_term
from .quadrature import QuadratureConfig, QuadratureError

EXIT_OK, EXIT_NUMERICAL, EXIT_USAGE = 0, 1, 2
METHODS = ("exact", "float", "euler", "integrals", "asymptotic")
CSV_COLUMNS = ("k", "alpha", "i_value", "i_err", "j_value", "j_err",
               "combination", "expected", "residual", "converged")
DEFAULT_ALPHA = 1.0
DEFAULT_TOL = 1e-8


class UsageError(Exception):
    pass


@dataclass(frozen=True)
class SweepSpec:
    k_values: tuple[int, ...]
    alpha_values: tuple[float, ...]
    config: QuadratureConfig
    output_format: str = "csv"
    unproven: bool = False

    def __post_init__(self):
        if not self.k_values:
            raise UsageError("k list is empty")
        if not self.alpha_values:
            raise UsageError("alpha list is empty")
        if any(k < 1 for k in self.k_values):
            raise UsageError("every k must be a positive integer")
        if not self.unproven and any(not a > 0 for a in self.alpha_values):
            raise UsageError("every alpha must be positive (use --allow-unproven to go below 0)")
        if self.output_format not in ("csv", "json"):
            raise UsageError(f"unknown format {self.output_format!r}")


def fmt(x: float) -> str:
    """15 significant digits, always showing that the value is a real."""
    s = format(x, ".15g")
    if s.lstrip("-").isdigit():
        s += ".0"
    return s


def _fmt_err(x):
    return format(x, ".2e")


def _parse_ints(text):
    out = []
    for part in filter(None, (p.strip() for p in text.split(","))):
        try:
            if ".." in part:
                lo, hi = (int(v) for v in part.split(".."))
                out.extend(range(lo, hi + 1))
            else:
                out.append(int(part))
        except ValueError:
            raise UsageError(f"cannot parse integer list item {part!r}") from None
    return tuple(out)


def _parse_floats(text):
    try:
        return tuple(float(p) for p in text.split(",") if p.strip())
    except ValueError:
        raise UsageError(f"cannot parse alpha list {text!r}") from None


def _config(args):
    try:
        return QuadratureConfig(args.abs_tol, args.rel_tol)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


# -- commands ---------------------------------------------------------------

def cmd_compute(args, out):
    if args.n < 1:
        raise UsageError(f"-n must be >= 1, got {args.n}")
    if args.alpha is not None and args.method != "integrals":
        raise UsageError("--alpha only applies to --method integrals")
    method = args.method
    if method == "exact":
        h = harmonic_exact(args.n)
        print(f"{h.numerator}/{h.denominator}", file=out)
        return EXIT_OK
    if method == "float":
        print(fmt(harmonic_float(args.n)), file=out)
        return EXIT_OK
    if method == "asymptotic":
        print(fmt(harmonic_asymptotic(args.n)), file=out)
        return EXIT_OK

    config = _config(args)
    if method == "euler":
        result = harmonic_via_euler(args.n, config)
        value, err, converged = result.value, result.error_estimate, result.converged
    else:
        alpha = DEFAULT_ALPHA if args.alpha is None else args.alpha
        if not alpha > 0:
            raise UsageError(f"--alpha must be positive, got {alpha}")
        report = harmonic_via_integrals(args.n, alpha, config)
        value, err, converged = report.integral_sum, report.error_budget, report.all_converged
    print(f"{fmt(value)} ± {_fmt_err(err)}", file=out)
    if not converged:
        print("error: quadrature did not converge", file=sys.stderr)
        return EXIT_NUMERICAL
    return EXIT_OK


def cmd_verify(args, out):
    if args.k < 1:
        raise UsageError(f"-k must be >= 1, got {args.k}")
    alpha = DEFAULT_ALPHA if args.alpha is None else args.alpha
    try:
        params = IdentityParams(args.k, alpha)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    term = verify_term(params, _config(args))
    lines = [
        ("k", str(params.k)),
        ("alpha", fmt(params.alpha)),
        ("coefficient", fmt(term.coefficient)),
        ("I", f"{fmt(term.i_result.value)} ± {_fmt_err(term.i_result.error_estimate)}"),
        ("J", f"{fmt(term.j_result.value)} ± {_fmt_err(term.j_result.error_estimate)}"),
        ("combination", fmt(term.combination)),
        ("expected", fmt(term.expected)),
        ("residual", _fmt_err(term.residual)),
        ("converged", str(term.converged).lower()),
    ]
    for name, text in lines:
        print(f"{name:<12} {text}", file=out)
    ok = term.passes(args.tol)
    print("PASS" if ok else "FAIL", file=out)
    return EXIT_OK if ok else EXIT_NUMERICAL


def run_sweep(spec: SweepSpec):
    """Evaluate every (k, alpha) cell; returns the terms and their report rows,
    k-major then alpha."""
    terms = [verify_term(IdentityParams(k, alpha, spec.unproven), spec.config)
             for k in spec.k_values for alpha in spec.alpha_values]
    return terms, [_row(t) for t in terms]


def _row(term):
    return {
        "k": term.params.k,
        "alpha": term.params.alpha,
        "i_value": term.i_result.value,
        "i_err": term.i_result.error_estimate,
        "j_value": term.j_result.value,
        "j_err": term.j_result.error_estimate,
        "combination": term.combination,
        "expected": term.expected,
        "residual": term.residual,
        "converged": term.converged,
    }


def render_csv(rows):
    buf = io.StringIO()
    writer = csv.writer(buf, lineterminator="\n")
    writer.writerow(CSV_COLUMNS)
    for row in rows:
        writer.writerow([
            row["k"], *(fmt(row[c]) for c in CSV_COLUMNS[1:-1]), str(row["converged"]).lower(),
        ])
    max_res = max(r["residual"] for r in rows)
    all_conv = str(all(r["converged"] for r in rows)).lower()
    buf.write(f"# rows={len(rows)} max_residual={fmt(max_res)} all_converged={all_conv}\n")
    return buf.getvalue()


def render_json(rows, spec):
    doc = {
        "meta": {
            "tool": "harmonic-integrals",
            "version": __version__,
            "config": asdict(spec.config),
            "unproven": spec.unproven,
        },
        "rows": rows,
        "summary": {
            "rows": len(rows),
            "max_residual": max(r["residual"] for r in rows),
            "all_converged": all(r["converged"] for r in rows),
        },
    }
    return json.dumps(doc, indent=2) + "\n"


def _write_atomic(path, text):
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(prefix=".sweep-", dir=directory)
    try:
        with os.fdopen(fd, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def cmd_sweep(args, out):
    spec = SweepSpec(_parse_ints(args.k), _parse_floats(args.alpha), _config(args),
                     args.format, args.allow_unproven)
    terms, rows = run_sweep(spec)
    text = render_csv(rows) if spec.output_format == "csv" else render_json(rows, spec)
    if args.out in (None, "-"):
        out.write(text)
    else:
        try:
            _write_atomic(args.out, text)
        except OSError as exc:
            print(f"error: cannot write {args.out}: {exc.strerror or exc}", file=sys.stderr)
            return EXIT_NUMERICAL
    ok = all(t.passes(args.tol) for t in terms)
    return EXIT_OK if ok else EXIT_NUMERICAL


def cmd_gamma(args, out):
    n_values = args.n or [10, 100, 1000, 10000]
    bad = [n for n in n_values if n < 2]
    if bad:
        raise UsageError(f"every n must be >= 2, got {bad[0]}")
    print(f"{'n':>10}  {'estimate':>20}  {'error':>10}", file=out)
    for n in n_values:
        est = estimate_gamma(n)
        print(f"{n:>10}  {fmt(est):>20}  {_fmt_err(est - EULER_GAMMA):>10}", file=out)
    return EXIT_OK


# -- parser -----------------------------------------------------------------

def _add_tolerances(p):
    p.add_argument("--abs-tol", type=float, default=1e-11, help="quadrature absolute tolerance")
    p.add_argument("--rel-tol", type=float, default=1e-11, help="quadrature relative tolerance")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="harmonic-integrals",
        description="Harmonic numbers from exact sums, quadrature and exp-sech integrals.",
    )
    parser.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="compute H_n by one method")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--method", choices=METHODS, default="exact")
    p.add_argument("--alpha", type=float, help="decay parameter for --method integrals (default 1.0)")
    _add_tolerances(p)
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("verify", help="check I_{k+1} + (alpha-(k-1))/k J_k = 1/k")
    p.add_argument("-k", type=int, required=True)
    p.add_argument("--alpha", type=float, help="decay parameter (default 1.0)")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="allowed residual")
    _add_tolerances(p)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("sweep", help="verify a grid of (k, alpha) terms and write a report")
    p.add_argument("-k", default="1..20", help="k values, e.g. '1..20' or '1,2,5'")
    p.add_argument("--alpha", default="0.1,0.5,1,2,5,10", help="comma-separated alpha values")
    p.add_argument("--tol", type=float, default=DEFAULT_TOL, help="allowed residual")
    p.add_argument("--out", help="output file (default stdout)")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--allow-unproven", action="store_true",
                   help="accept -k < alpha <= 0, outside the proven range")
    _add_tolerances(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("gamma", help="estimate the Euler-Mascheroni constant from H_n")
    p.add_argument("-n", type=int, nargs="*", help="values of n (>= 2)")
    p.set_defaults(func=cmd_gamma)
    return parser


def main(argv=None, out=None) -> int:
    out = sys.stdout if out is None else out
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    try:
        return args.func(args, out)
    except UsageError as exc:
        parser.print_usage(sys.stderr)
        print(f"{parser.prog} {args.command}: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except QuadratureError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_NUMERICAL


if __name__ == "__main__":
    sys.exit(main())

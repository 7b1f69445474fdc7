"""Command-line front end.

    hermite-calculus hermite   --order 2 --n 4 --x 1 --y 1
    hermite-calculus integral  j --a 1 --b 1 --c 1 --method series --oracle
    hermite-calculus verify    --suite all --format json --out report.json

Exit codes: 0 success, 1 failed comparison(s), 2 bad flags, 3 domain
error, 4 convergence failure.
"""

from __future__ import annotations

import argparse
import csv
import io
import json
import math
import sys
import time

from . import hermite as hc
from . import integrals as ig
from . import oracles
from ._types import ConvergenceError, DivergenceError, DomainError, SeriesResult
from .verification import REPORT_FIELDS, EvalReport, run_suite

EXIT_OK, EXIT_FAILED, EXIT_USAGE, EXIT_DOMAIN, EXIT_CONVERGENCE = 0, 1, 2, 3, 4


# -- output ----------------------------------------------------------------

def fmt_number(v) -> str:
    """17 significant digits, enough to round-trip any double."""
    return format(float(v), ".17g")


def _json_value(v):
    if v is None or isinstance(v, bool):
        return json.dumps(v)
    if isinstance(v, int):
        return str(v)
    if isinstance(v, float):
        return fmt_number(v) if math.isfinite(v) else "null"
    if isinstance(v, str):
        return json.dumps(v, ensure_ascii=False)
    if isinstance(v, dict):
        return "{" + ", ".join(f"{json.dumps(str(k))}: {_json_value(x)}" for k, x in v.items()) + "}"
    if isinstance(v, (list, tuple)):
        return "[" + ", ".join(_json_value(x) for x in v) + "]"
    return _json_value(float(v))


def report_json(report: EvalReport) -> str:
    return _json_value(report.as_dict())


def reports_json(reports) -> str:
    if not reports:
        return "[]\n"
    return "[\n" + ",\n".join("  " + report_json(r) for r in reports) + "\n]\n"


def _csv_cell(v):
    if v is None:
        return ""
    if isinstance(v, bool):
        return "true" if v else "false"
    if isinstance(v, float):
        return fmt_number(v) if math.isfinite(v) else ""
    if isinstance(v, dict):
        return _json_value(v)
    return str(v)


def reports_csv(reports) -> str:
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(REPORT_FIELDS)
    for r in reports:
        w.writerow([_csv_cell(getattr(r, k)) for k in REPORT_FIELDS])
    return buf.getvalue()


# -- parser ----------------------------------------------------------------

class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


FAMILY_FLAGS = {
    "i": ("alpha", "beta", "gamma"),
    "gauss-quartic": ("gamma", "beta"),
    "j": ("a", "b", "c"),
    "power": ("n", "beta", "gamma"),
    "pearcey": ("x", "y"),
    "f": ("a", "b", "c"),
}

# first entry is the default method
FAMILY_METHODS = {
    "i": ("series", "closed"),
    "gauss-quartic": ("closed",),
    "j": ("series", "perturbative"),
    "power": ("closed",),
    "pearcey": ("series", "recursive"),
    "f": ("series",),
}


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="hermite-calculus", description="Hermite polynomials and umbral integral evaluators.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    h = sub.add_parser("hermite", help="two-variable or fourth-order Hermite polynomials")
    h.add_argument("--order", type=int, choices=(2, 4), default=2)
    h.add_argument("--n", type=int, required=True)
    h.add_argument("--x", type=float)
    h.add_argument("--y", type=float)
    h.add_argument("--c", type=float)
    h.add_argument("--a", type=float)
    h.add_argument("--sequence", action="store_true", help="print H_0 ... H_n, one per line")

    it = sub.add_parser("integral", help="evaluate one integral family")
    it.add_argument("family", choices=tuple(FAMILY_FLAGS))
    for flag in ("alpha", "beta", "gamma", "a", "b", "c", "x", "y"):
        it.add_argument(f"--{flag}", type=float)
    it.add_argument("--n", type=int)
    it.add_argument("--method", choices=("closed", "series", "recursive", "perturbative"))
    it.add_argument("--form", choices=("d", "k"), default="d", help="gauss-quartic closed form")
    it.add_argument("--oracle", action="store_true", help="co-run the quadrature oracle")
    it.add_argument("--tol", type=float, default=1e-10)
    it.add_argument("--n-terms", type=int)
    it.add_argument("--format", choices=("json", "csv"), default="json")

    v = sub.add_parser("verify", help="run the compiled-in comparison grids")
    v.add_argument("--suite", choices=("core", "fractional", "integrals", "all"), default="all")
    v.add_argument("--format", choices=("json", "csv"), default="json")
    v.add_argument("--out", help="output path (default: standard output)")
    v.add_argument("--threads", type=int, help="worker threads (default: THREADS or 1)")
    return p


# -- commands --------------------------------------------------------------

class _Usage(Exception):
    """Flag combination the parser cannot reject on its own."""


def cmd_hermite(args, out) -> int:
    if args.n < 0:
        raise DomainError("--n must be non-negative")
    if args.order == 2:
        if args.x is None or args.y is None:
            raise _Usage("--order 2 needs --x and --y")
        if args.sequence:
            values = hc.hermite2_sequence(args.n, (args.x, args.y))
        else:
            values = [hc.hermite2(args.n, (args.x, args.y))]
    else:
        if args.c is None or args.a is None:
            raise _Usage("--order 4 needs --c and --a")
        ks = range(args.n + 1) if args.sequence else (args.n,)
        values = [hc.hermite4_two_arg(k, args.c, args.a) for k in ks]
    for v in values:
        out.write(fmt_number(v) + "\n")
    return EXIT_OK


def _evaluate(family, method, prm, args):
    # returns (value, SeriesResult or None)
    tol = args.tol
    if family == "i":
        if method == "closed":
            return ig.integral_i_closed(prm["alpha"], prm["beta"], prm["gamma"]), None
        res = ig.integral_i_series(prm["alpha"], prm["beta"], prm["gamma"], tol)
    elif family == "gauss-quartic":
        return ig.integral_gauss_quartic(prm["gamma"], prm["beta"], form=args.form), None
    elif family == "j":
        if method == "perturbative":
            res = ig.integral_j_perturbative(prm["a"], prm["b"], prm["c"], n_terms=args.n_terms or 40, tol=tol)
        else:
            res = ig.integral_j_series(prm["a"], prm["b"], prm["c"], tol)
    elif family == "power":
        return ig.integral_power(prm["n"], prm["beta"], prm["gamma"]), None
    elif family == "pearcey":
        if method == "recursive":
            res = ig.pearcey_recursive(prm["x"], prm["y"], n_terms=args.n_terms or 60, tol=tol)
        else:
            res = ig.pearcey(prm["x"], prm["y"], tol)
    else:
        res = ig.integral_f_series(prm["a"], prm["b"], prm["c"], n_terms=args.n_terms or 30, tol=tol)
    return res.value, res


def _oracle(family, prm):
    if family == "i":
        return oracles.integral_i_oracle(prm["alpha"], prm["beta"], prm["gamma"]).value
    if family == "gauss-quartic":
        return oracles.gauss_quartic_oracle(prm["gamma"], prm["beta"]).value
    if family == "j":
        return oracles.integral_j_oracle(prm["a"], prm["b"], prm["c"]).value
    if family == "power":
        return oracles.power_oracle(prm["n"], prm["beta"], prm["gamma"]).value
    if family == "pearcey":
        return oracles.pearcey_oracle(prm["x"], prm["y"]).value
    return oracles.integral_f_oracle(prm["a"], prm["b"], prm["c"]).value


def cmd_integral(args, out) -> int:
    family = args.family
    method = args.method or FAMILY_METHODS[family][0]
    if method not in FAMILY_METHODS[family]:
        raise _Usage(f"method {method!r} is not available for {family!r}; "
                     f"choose from {', '.join(FAMILY_METHODS[family])}")
    missing = [f"--{k}" for k in FAMILY_FLAGS[family] if getattr(args, k) is None]
    if missing:
        raise _Usage(f"{family} needs {' '.join(missing)}")
    if not args.tol > 0:
        raise _Usage("--tol must be positive")
    prm = {k: getattr(args, k) for k in FAMILY_FLAGS[family]}
    ig.UmbralParams(family, prm).validate()

    t0 = time.perf_counter_ns()
    value, res = _evaluate(family, method, prm, args)
    elapsed = time.perf_counter_ns() - t0
    oracle = _oracle(family, prm) if args.oracle else None
    converged = res.converged if isinstance(res, SeriesResult) else True
    name = {"i": "integral_i_" + method, "gauss-quartic": "integral_gauss_quartic",
            "j": "integral_j_" + method, "power": "integral_power",
            "pearcey": "pearcey_recursive" if method == "recursive" else "pearcey",
            "f": "integral_f_series"}[family]
    params = dict(prm, method=method)
    if family == "gauss-quartic":
        params["form"] = args.form
    report = EvalReport.build(name, params, value, oracle, res.terms_used if res else None,
                              converged, elapsed)
    out.write(report_json(report) + "\n" if args.format == "json" else reports_csv([report]))
    if not converged:
        return EXIT_CONVERGENCE
    if oracle is not None and not report.rel_err <= args.tol:
        return EXIT_FAILED
    return EXIT_OK


def cmd_verify(args, out) -> int:
    reports = run_suite(args.suite, threads=args.threads)
    text = reports_json(reports) if args.format == "json" else reports_csv(reports)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="") as fh:
            fh.write(text)
    else:
        out.write(text)
    failed = [r for r in reports if not r.passed]
    for r in failed:
        sys.stderr.write(f"FAIL {r.name} {_json_value(r.params)}\n")
    sys.stderr.write(f"{len(reports) - len(failed)}/{len(failed)}/{len(reports)}\n")
    return EXIT_FAILED if failed else EXIT_OK


COMMANDS = {"hermite": cmd_hermite, "integral": cmd_integral, "verify": cmd_verify}


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
    except SystemExit as exc:  # --help and flag errors
        return int(exc.code or 0)
    out = sys.stdout
    try:
        return COMMANDS[args.command](args, out)
    except _Usage as exc:
        sys.stderr.write(f"hermite-calculus: error: {exc}\n")
        return EXIT_USAGE
    except DomainError as exc:
        sys.stderr.write(f"hermite-calculus: domain error: {exc}\n")
        return EXIT_DOMAIN
    except (DivergenceError, ConvergenceError) as exc:
        sys.stderr.write(f"hermite-calculus: convergence failure: {exc}\n")
        return EXIT_CONVERGENCE


if __name__ == "__main__":
    sys.exit(main())

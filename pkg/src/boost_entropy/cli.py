"""Command-line interface: single evaluations, sweeps, regime comparison, self-check.

Exit codes: 0 success, 1 verification failure, 2 usage error,
3 quadrature did not converge, 4 I/O error.
"""

from __future__ import annotations

import argparse
import math
import os
import sys

import numpy as np

from . import __version__
from .compare import compare_at, match_box_to_packet
from .core import ConvergenceError, DomainError, InvalidStateError, boost_from_beta
from .galilean import BoxModel, abs_f, galilean_entropy, overlap_f, phase_argument, sinc_deficit
from .relativistic import (
    GaussianPacket,
    nz_prime_deficit,
    nz_prime_series,
    peres_entropy_exact,
    peres_entropy_leading,
)
from .tables import convert_units, to_csv, to_json

EXIT_OK, EXIT_VERIFY, EXIT_USAGE, EXIT_CONVERGENCE, EXIT_IO = 0, 1, 2, 3, 4
DEFAULT_TOL = 1e-8
TOL_ENV = "BOOST_ENTROPY_TOL"

RELATIVISTIC_COLUMNS = ["wtilde", "beta", "gamma", "nz_quadrature", "nz_series2", "nz_series4",
                        "entropy_exact", "entropy_leading", "quad_error", "evaluations"]
GALILEAN_COLUMNS = ["mass", "e0", "e1", "length", "c", "v", "x", "f_real", "f_imag", "abs_f",
                    "eig_low", "eig_high", "entropy"]
COMPARE_COLUMNS = ["beta", "wtilde_equiv", "entropy_relativistic", "entropy_galilean", "ratio",
                   "deficit_relativistic", "deficit_galilean", "deficit_gap"]
SWEEP_PARAMS = {
    "relativistic": ("wtilde", "beta"),
    "galilean": ("mass", "e0", "e1", "length", "c", "v"),
    "compare": ("beta", "mass", "e0", "e1", "length", "c"),
}


class UsageError(Exception):
    pass


def relativistic_record(wtilde: float, beta: float, tol: float) -> dict:
    packet, boost = GaussianPacket(wtilde), boost_from_beta(beta)
    res = nz_prime_deficit(packet, boost, tol)
    return {
        "wtilde": float(wtilde),
        "beta": float(beta),
        "gamma": boost.gamma,
        "nz_quadrature": 1.0 - res.value,
        "nz_series2": nz_prime_series(packet, boost, 2),
        "nz_series4": nz_prime_series(packet, boost, 4),
        "entropy_exact": peres_entropy_exact(packet, boost, tol),
        "entropy_leading": peres_entropy_leading(packet, boost),
        "quad_error": float(res.error_estimate),
        "evaluations": int(res.evaluations),
    }


def galilean_record(model: BoxModel, v: float) -> dict:
    f = overlap_f(model, v)
    # (1 -/+ |f|)/2 via the sinc deficit; the matrix route rounds lo to ~1e-16
    lo = 0.5 * sinc_deficit(phase_argument(model, v))
    hi = 1.0 - lo
    return {
        "mass": float(model.m), "e0": float(model.E0), "e1": float(model.E1),
        "length": float(model.L), "c": float(model.c), "v": float(v),
        "x": phase_argument(model, v),
        "f_real": f.real, "f_imag": f.imag,
        "abs_f": abs_f(model, v),
        "eig_low": lo, "eig_high": hi,
        "entropy": galilean_entropy(model, v),
    }


def compare_record(model: BoxModel, beta: float, tol: float) -> dict:
    wt = match_box_to_packet(model)
    row = compare_at(model, wt, beta, tol)
    return {
        "beta": float(beta), "wtilde_equiv": wt,
        "entropy_relativistic": row.entropy_relativistic,
        "entropy_galilean": row.entropy_galilean,
        "ratio": row.ratio,
        "deficit_relativistic": row.deficit_relativistic,
        "deficit_galilean": row.deficit_galilean,
        "deficit_gap": row.deficit_gap,
    }


def resolve_tol(flag: float | None) -> float:
    """Flag beats the environment, which beats the default."""
    tol = flag
    env = os.environ.get(TOL_ENV)
    if tol is None and env:
        try:
            tol = float(env)
        except ValueError:
            raise UsageError(f"{TOL_ENV}={env!r} is not a number")
    if tol is None:
        return DEFAULT_TOL
    if not 1e-13 < tol < 1e-2:
        raise UsageError(f"tolerance {tol} outside (1e-13, 1e-2)")
    return tol


def _model(args) -> BoxModel:
    return BoxModel(args.mass, args.e0, args.e1, args.length, args.c, args.mode)


def _emit(args, params: dict, rows: list[dict], columns: list[str], meta: dict) -> None:
    rows = convert_units(rows, args.unit)
    meta = {"version": __version__, "unit": args.unit, **meta}
    text = to_json(params, rows, meta) if args.format == "json" else to_csv(rows, columns)
    if args.out:
        with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def cmd_relativistic(args) -> int:
    tol = resolve_tol(args.tol)
    row = relativistic_record(args.wtilde, args.beta, tol)
    _emit(args, {"wtilde": args.wtilde, "beta": args.beta}, [row], RELATIVISTIC_COLUMNS, {"tol": tol})
    return EXIT_OK


def cmd_galilean(args) -> int:
    model = _model(args)
    row = galilean_record(model, args.v)
    _emit(args, {k: row[k] for k in GALILEAN_COLUMNS[:6]}, [row], GALILEAN_COLUMNS, {})
    return EXIT_OK


def cmd_compare(args) -> int:
    tol = resolve_tol(args.tol)
    model = _model(args)
    rows = [compare_record(model, b, tol) for b in args.beta]
    params = {"mass": model.m, "e0": model.E0, "e1": model.E1, "length": model.L, "c": model.c}
    _emit(args, params, rows, COMPARE_COLUMNS, {"tol": tol})
    return EXIT_OK


def sweep_grid(start: float, stop: float, steps: int, spacing: str) -> np.ndarray:
    if steps < 2:
        raise UsageError("a sweep needs at least 2 steps")
    if start == stop:
        raise UsageError("sweep start and stop must differ")
    if spacing == "log":
        if start <= 0 or stop <= 0:
            raise UsageError("log spacing needs positive endpoints")
        return np.geomspace(start, stop, steps)
    return np.linspace(start, stop, steps)


def sweep_rows(regime: str, param: str, grid, fixed: dict, tol: float) -> tuple[list[dict], list[str]]:
    """One row per grid point; failing points carry a status instead of being dropped."""
    if param not in SWEEP_PARAMS[regime]:
        raise UsageError(f"{regime} sweeps accept {SWEEP_PARAMS[regime]}, not {param!r}")
    base = {"relativistic": RELATIVISTIC_COLUMNS, "galilean": GALILEAN_COLUMNS,
            "compare": COMPARE_COLUMNS}[regime]
    columns = ["index", param, *[c for c in base if c != param], "status"]
    rows = []
    for i, value in enumerate(grid):
        p = {**fixed, param: float(value)}
        try:
            if regime == "relativistic":
                rec = relativistic_record(p["wtilde"], p["beta"], tol)
            else:
                model = BoxModel(p["mass"], p["e0"], p["e1"], p["length"], p["c"], p.get("mode", 0))
                rec = (galilean_record(model, p["v"]) if regime == "galilean"
                       else compare_record(model, p["beta"], tol))
            status = "ok"
        except ConvergenceError as exc:
            rec, status = {}, f"convergence:{exc.error:.3g}"
        except (DomainError, InvalidStateError) as exc:
            rec, status = {}, f"domain:{exc}".replace(",", ";")
        row = {c: rec.get(c, math.nan) for c in columns}
        row.update({"index": i, param: float(value), "status": status})
        rows.append(row)
    return rows, columns


def plot_script(data_path: str, columns: list[str], param: str, log_x: bool) -> str:
    """gnuplot commands plotting every entropy column against the swept parameter."""
    xcol = columns.index(param) + 1
    plots = [f"'{data_path}' using {xcol}:{columns.index(c) + 1} with linespoints title '{c}'"
             for c in columns if c.startswith("entropy")]
    lines = ["set datafile separator ','", "set key autotitle columnhead",
             f"set xlabel '{param}'", "set ylabel 'entropy'"]
    if log_x:
        lines.append("set logscale x")
    lines.append("plot " + ", \\\n     ".join(plots))
    return "\n".join(lines) + "\n"


def cmd_sweep(args) -> int:
    tol = resolve_tol(args.tol)
    grid = sweep_grid(args.start, args.stop, args.steps, args.spacing)
    fixed = {"wtilde": args.wtilde, "beta": args.beta_value, "mass": args.mass, "e0": args.e0,
             "e1": args.e1, "length": args.length, "c": args.c, "v": args.v, "mode": args.mode}
    rows, columns = sweep_rows(args.regime, args.param, grid, fixed, tol)
    params = {"regime": args.regime, "param": args.param, "start": args.start, "stop": args.stop,
              "steps": args.steps, "spacing": args.spacing,
              **{k: v for k, v in fixed.items() if k in SWEEP_PARAMS[args.regime] and k != args.param}}
    _emit(args, params, rows, columns, {"tol": tol})
    if args.plot_script:
        if not args.out or args.format != "csv":
            raise UsageError("--plot-script needs --format csv and --out")
        with open(args.plot_script, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(plot_script(args.out, columns, args.param, args.spacing == "log"))
    return EXIT_OK


def cmd_verify(args) -> int:
    from .verify import DEFAULT_VERIFY_TOL, run_checks

    tol = DEFAULT_VERIFY_TOL if args.tol is None else resolve_tol(args.tol)
    results = run_checks(tol)
    for r in results:
        print(f"[{'PASS' if r.passed else 'FAIL'}] {r.name}: {r.detail}")
    failed = sum(not r.passed for r in results)
    print(f"{len(results) - failed}/{len(results)} checks passed (quadrature tol {tol:g})")
    return EXIT_OK if failed == 0 else EXIT_VERIFY


def _add_output(p):
    p.add_argument("--unit", choices=("nats", "bits"), default="nats")
    p.add_argument("--format", choices=("csv", "json"), default="csv")
    p.add_argument("--out", metavar="PATH")


def _add_box(p, v=True):
    p.add_argument("--mass", type=float, default=1.0)
    p.add_argument("--e0", type=float, default=0.0)
    p.add_argument("--e1", type=float, default=1.0)
    p.add_argument("--length", type=float, default=1.0)
    p.add_argument("--c", type=float, default=1.0)
    p.add_argument("--mode", type=int, default=0, help="momentum mode index n")
    if v:
        p.add_argument("--v", type=float, default=0.0)


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_USAGE, f"{self.prog}: error: {message}\n")


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="boost-entropy", description=__doc__.splitlines()[0])
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    p = sub.add_parser("relativistic", help="Gaussian spinor packet under a Lorentz boost")
    p.add_argument("--wtilde", type=float, required=True)
    p.add_argument("--beta", type=float, required=True)
    p.add_argument("--tol", type=float)
    _add_output(p)
    p.set_defaults(func=cmd_relativistic)

    p = sub.add_parser("galilean", help="box model under a Galilean boost")
    _add_box(p)
    _add_output(p)
    p.set_defaults(func=cmd_galilean)

    p = sub.add_parser("compare", help="matched relativistic vs Galilean entropies")
    _add_box(p, v=False)
    p.add_argument("--beta", type=float, nargs="+", required=True)
    p.add_argument("--tol", type=float)
    _add_output(p)
    p.set_defaults(func=cmd_compare)

    p = sub.add_parser("sweep", help="tabulate one parameter over a grid")
    p.add_argument("--regime", choices=tuple(SWEEP_PARAMS), required=True)
    p.add_argument("--param", required=True)
    p.add_argument("--start", type=float, required=True)
    p.add_argument("--stop", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)
    p.add_argument("--spacing", choices=("linear", "log"), default="linear")
    p.add_argument("--wtilde", type=float, default=0.1)
    p.add_argument("--beta", dest="beta_value", type=float, default=0.0)
    p.add_argument("--tol", type=float)
    p.add_argument("--plot-script", metavar="PATH", help="write a gnuplot script for the CSV")
    _add_box(p)
    _add_output(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("verify", help="run the self-verification suite")
    p.add_argument("--tol", type=float, help="quadrature tolerance for the checks")
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:  # --help, --version and argument errors
        return exc.code
    try:
        return args.func(args)
    except (UsageError, DomainError, InvalidStateError) as exc:
        print(f"boost-entropy: usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ConvergenceError as exc:
        print(f"boost-entropy: {exc}", file=sys.stderr)
        return EXIT_CONVERGENCE
    except OSError as exc:
        print(f"boost-entropy: I/O error: {exc}", file=sys.stderr)
        return EXIT_IO


if __name__ == "__main__":
    sys.exit(main())

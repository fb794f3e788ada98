"""Command-line interface: bounds, coefficients, solver runs and figure data.

Exit status is 0 on success, 2 on invalid input, 3 when the solver did not
certify a local minimum (results are still written).
"""
from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from .approx import SolverConfig, solve_rab, solve_sweep
from .blaschke import parse_zeros_inline, read_blaschke, taylor_coeffs_fft, taylor_coeffs_series
from .bounds import BoundParams, beta_star, delay_bound, general_bound, optimize_alpha_beta, s_star
from .errors import DomainError, GridCapError, NumericalError
from .experiments import (
    run_alpha_scan,
    run_beta_scan,
    run_blaschke_figure,
    run_coeff_verify,
    run_delay_figure,
    run_product_verify,
)
from .svgplot import PlotSpec, emit_svg
from .table import CsvTable

EXIT_DOMAIN = 2
EXIT_NOT_CONVERGED = 3


class _NotConverged(Exception):
    pass


def _product(args):
    if args.file is not None:
        return read_blaschke(args.file)
    return parse_zeros_inline(args.zeros)


def _solver_cfg(args) -> SolverConfig:
    return SolverConfig(n_starts=args.starts, seed=args.seed, real_symmetric=getattr(args, "real", False))


def _print_table(table: CsvTable, out: str | None) -> None:
    if out:
        table.write(out)
    else:
        sys.stdout.write(table.to_csv())


def _print_report(rep) -> None:
    p = rep.params
    for key, val in (
        ("value", rep.value), ("valid", int(rep.valid)), ("inner", rep.inner), ("alpha", p.alpha),
        ("beta", p.beta), ("s_star", rep.s_star), ("li_value", rep.li_value), ("k_beta_sq", rep.k_beta_sq),
    ):
        print(f"{key} {val:.17g}" if isinstance(val, float) else f"{key} {val}")


# ----------------------------------------------------------------- commands

def cmd_bound(args) -> None:
    if args.kind == "delay":
        print(f"{delay_bound(args.n, args.N):.17g}")
        return
    if args.lam is None:
        raise DomainError("bound general needs --lambda")
    if args.alpha is None:
        _print_report(optimize_alpha_beta(args.N, args.n, args.lam))
        return
    beta = args.beta
    if beta is None:
        beta = beta_star(args.n, s_star(args.lam, args.alpha) ** -2)
    _print_report(general_bound(BoundParams(args.N, args.n, args.lam, args.alpha, beta)))


def cmd_coeffs(args) -> None:
    b = _product(args)
    if args.method == "fft":
        s = taylor_coeffs_fft(b, args.kmax, args.tol)
    else:
        s = taylor_coeffs_series(b, args.kmax)
    rows = [(int(k), c.real, c.imag, abs(c)) for k, c in zip(s.indices, s.coeffs)]
    _print_table(CsvTable(("k", "re", "im", "abs"), rows), args.out)


def _poly_rows(tag: str, coeffs) -> list:
    return [(tag, j, c.real, c.imag) for j, c in enumerate(np.asarray(coeffs, dtype=complex))]


def cmd_solve(args) -> None:
    f = _product(args)
    res = solve_rab(f, args.n, _solver_cfg(args))
    print(f"error {res.error:.17g}")
    print(f"converged {int(res.converged)}")
    print(f"starts_used {res.starts_used}")
    print(f"best_start_index {res.best_start_index}")
    print(f"iterations {res.iterations}")
    print(f"grid_size {res.grid_size}")
    for z in res.poles.points:
        print(f"pole {z.real:.17g} {z.imag:.17g}")
    for name, poly in (("num", res.approximant.numerator), ("den", res.approximant.denominator)):
        for j, c in enumerate(poly.coeffs):
            print(f"{name} {j} {c.real:.17g} {c.imag:.17g}")
    if not res.converged:
        raise _NotConverged()


def cmd_sweep(args) -> None:
    f = _product(args)
    results = solve_sweep(f, args.nmax, _solver_cfg(args))
    rows = [(r.n, r.error, int(r.converged), r.starts_used, r.grid_size) for r in results]
    _print_table(CsvTable(("n", "error", "converged", "starts_used", "grid_size"), rows), args.out)
    if not all(r.converged for r in results):
        raise _NotConverged()


def _write(table: CsvTable, out: Path, name: str, svg: bool, spec: PlotSpec | None) -> None:
    table.write(out / f"{name}.csv")
    if svg and spec is not None:
        emit_svg(table, spec, out / f"{name}.svg")


def cmd_figure(args) -> None:
    out = Path(args.out)
    out.mkdir(parents=True, exist_ok=True)
    n_hi = 20 if args.full else args.nmax
    cfg = SolverConfig(n_starts=args.starts, seed=args.seed)
    converged = True
    if args.which == "first":
        results: list = []
        t = run_delay_figure(args.N, range(1, n_hi + 1), cfg, results=results)
        converged = all(r.converged for r in results)
        spec = PlotSpec("n", ("one_minus_bound", "one_minus_error"), f"z^{args.N}: one minus bound and error")
        _write(t, out, "first_bound", args.svg, spec)
    elif args.which == "second":
        res: dict = {}
        t = run_blaschke_figure(args.N, args.lam, range(1, n_hi + 1), cfg, results=res)
        converged = all(r.converged for rs in res.values() for r in rs)
        cols = ("thm3_bound", "error_B1", "error_B2", "error_B3")
        table_1m = CsvTable(("n",) + cols, [(r[0],) + tuple(1.0 - v for v in r[1:]) for r in t.rows])
        _write(t, out, "second_bound", False, None)
        if args.svg:
            emit_svg(table_1m, PlotSpec("n", cols, "Blaschke products: one minus bound and errors"),
                     out / "second_bound.svg")
    elif args.which == "alpha":
        t = run_alpha_scan(args.N, args.n, args.lam, args.grid)
        _write(t, out, "alpha_scan", args.svg, PlotSpec("alpha", ("bound_value",), f"bound against alpha, n={args.n}"))
    elif args.which == "beta":
        t = run_beta_scan(n_range=range(0, args.beta_nmax + 1))
        _write(t, out, "beta_star", False, None)
        if args.svg:
            pairs = sorted({(r[0], r[1]) for r in t.rows})
            header = ("n",) + tuple(f"lam{lam:g}_ratio{ratio:g}" for lam, ratio in pairs)
            by = {(r[0], r[1], r[2]): r[4] for r in t.rows}
            wide = CsvTable(header, [(n,) + tuple(by[(lam, ratio, n)] for lam, ratio in pairs)
                                     for n in range(0, args.beta_nmax + 1)])
            emit_svg(wide, PlotSpec("n", header[1:], "optimal beta"), out / "beta_star.svg")
    elif args.which == "coeffverify":
        t = run_coeff_verify(args.count, 10, 0.8, args.seed)
        _write(t, out, "coeff_verify", False, None)
        run_product_verify(count=20, seed=args.seed).write(out / "product_coeff_verify.csv")
    if not converged:
        raise _NotConverged()


# ------------------------------------------------------------------- parser

def _add_product_args(p) -> None:
    g = p.add_mutually_exclusive_group(required=True)
    g.add_argument("--file", help="product file: 'c_re c_im' then one 're im' line per zero")
    g.add_argument("--zeros", help="inline zeros 're,im;re,im;...'")


def _add_solver_args(p) -> None:
    p.add_argument("--starts", type=int, default=32, help="fresh random starts (default 32)")
    p.add_argument("--seed", type=int, default=0)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blaschke-h2", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("bound", help="evaluate a lower bound")
    p.add_argument("kind", choices=("delay", "general"))
    p.add_argument("--N", type=int, required=True)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--lambda", dest="lam", type=float)
    p.add_argument("--alpha", type=float)
    p.add_argument("--beta", type=float)
    p.set_defaults(func=cmd_bound)

    p = sub.add_parser("coeffs", help="Taylor coefficients of a Blaschke product")
    _add_product_args(p)
    p.add_argument("--kmax", type=int, required=True)
    p.add_argument("--method", choices=("series", "fft"), default="series")
    p.add_argument("--tol", type=float, default=1e-12)
    p.add_argument("--out")
    p.set_defaults(func=cmd_coeffs)

    p = sub.add_parser("solve", help="best approximation of one degree")
    _add_product_args(p)
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--real", action="store_true", help="conjugate-symmetric poles")
    _add_solver_args(p)
    p.set_defaults(func=cmd_solve)

    p = sub.add_parser("sweep", help="best approximations for degrees 1..nmax")
    _add_product_args(p)
    p.add_argument("--nmax", type=int, required=True)
    p.add_argument("--real", action="store_true")
    p.add_argument("--out")
    _add_solver_args(p)
    p.set_defaults(func=cmd_sweep)

    p = sub.add_parser("figure", help="regenerate figure data as CSV (and SVG)")
    p.add_argument("which", choices=("first", "second", "alpha", "beta", "coeffverify"))
    p.add_argument("--out", default=".")
    p.add_argument("--svg", action="store_true")
    p.add_argument("--full", action="store_true", help="degrees up to 20 instead of --nmax")
    p.add_argument("--nmax", type=int, default=8)
    p.add_argument("--N", type=int, default=100)
    p.add_argument("--lambda", dest="lam", type=float, default=0.5)
    p.add_argument("--n", type=int, default=4, help="degree for the alpha scan")
    p.add_argument("--grid", type=int, default=400, help="alpha samples")
    p.add_argument("--beta-nmax", type=int, default=100)
    p.add_argument("--count", type=int, default=100, help="random products for coeffverify")
    _add_solver_args(p)
    p.set_defaults(func=cmd_figure)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        args.func(args)
    except (DomainError, GridCapError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_DOMAIN
    except _NotConverged:
        print("warning: solver did not certify a local minimum", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    except NumericalError as exc:
        print(f"numerical failure: {exc}", file=sys.stderr)
        return EXIT_NOT_CONVERGED
    return 0


if __name__ == "__main__":
    sys.exit(main())

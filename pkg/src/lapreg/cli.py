"""Command-line experiment harness.

Subcommands mirror the scenario runners; results go to CSV (stdout when no
--out-csv is given) with an optional SVG chart.  Exit codes: 0 success,
1 usage error, 2 data error (parse/disconnected), 3 numerical failure.
"""

from __future__ import annotations

import argparse
import re
import sys

import numpy as np

from . import experiments
from .errors import (
    ConvergenceError,
    EigenError,
    GraphError,
    EdgeListParseError,
    GenerationError,
    SolveError,
)
from .svgchart import render_svg
from .table import write_csv


class _Parser(argparse.ArgumentParser):
    def __init__(self, *args, **kwargs):
        super().__init__(*args, **kwargs)
        # widen argparse's negative-number detection so values like
        # "-10,0,10" (an omega_1 sweep) are not mistaken for option flags
        self._negative_number_matcher = re.compile(r"^-\d+[\d.,eE+-]*$")

    def error(self, message):
        self.print_usage(sys.stderr)
        sys.stderr.write(f"{self.prog}: error: {message}\n")
        raise SystemExit(1)


def _float_list(text: str) -> list[float]:
    return [float(tok) for tok in text.split(",") if tok.strip()]


def _int_list(text: str) -> list[int]:
    return [int(tok) for tok in text.split(",") if tok.strip()]


def _sweep(text: str) -> np.ndarray:
    """Either "v1,v2,..." or "log:<lo>:<hi>:<count>"."""
    if text.startswith("log:"):
        _, lo, hi, count = text.split(":")
        return np.logspace(np.log10(float(lo)), np.log10(float(hi)), int(count))
    return np.asarray(_float_list(text))


def _coeff_list(text: str) -> list[tuple[int, float]]:
    """Active basis "index:weight,index:weight,..." with 1-based indices."""
    out = []
    for tok in text.split(","):
        if not tok.strip():
            continue
        j, om = tok.split(":")
        out.append((int(j), float(om)))
    return out


def _add_common(sub: argparse.ArgumentParser, theta_default: str | None) -> None:
    sub.add_argument("--seed", type=int, default=0)
    sub.add_argument("--realizations", type=int, default=50)
    sub.add_argument("--mu", type=float, default=10.0)
    sub.add_argument("--out-csv", default=None, help="CSV path (stdout when omitted)")
    sub.add_argument("--out-svg", default=None, help="optional chart path")
    if theta_default is not None:
        sub.add_argument("--theta", type=_sweep, default=_sweep(theta_default),
                         help="list v1,v2,... or log:<lo>:<hi>:<count>")


def _add_family(sub: argparse.ArgumentParser, default: str = "er") -> None:
    sub.add_argument("--family", choices=["er", "ws", "complete"], default=default)
    sub.add_argument("--n", type=int, default=100)
    sub.add_argument("--p", type=float, default=0.1)
    sub.add_argument("--d", type=int, default=20)
    sub.add_argument("--q", type=float, default=0.4)
    sub.add_argument("--w", type=float, default=1.0)


def build_parser() -> _Parser:
    parser = _Parser(prog="lapreg", description=__doc__)
    subs = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    sp = subs.add_parser("mse-vs-p", help="per-node MSE and envelope vs edge probability")
    sp.add_argument("--n", type=int, default=100)
    sp.add_argument("--p", type=_float_list,
                    default=[round(0.1 * k, 10) for k in range(1, 11)],
                    help="comma-separated edge probabilities")
    sp.add_argument("--alphas", type=_float_list, default=[0.1, 1.0, 10.0])
    sp.add_argument("--sigma", type=float, default=1.0)
    _add_common(sp, theta_default=None)

    sp = subs.add_parser("alpha-vs-theta", help="optimal alpha across the noise sweep")
    _add_family(sp)
    sp.add_argument("--alpha-b", type=float, default=2000.0)
    sp.add_argument("--alpha-t", type=int, default=10_000)
    sp.add_argument("--beta", type=float, default=1.0)
    _add_common(sp, theta_default="log:1e-3:1e3:30")

    sp = subs.add_parser("real-graph", help="envelope sweep on an edge-list file")
    sp.add_argument("--graph", required=True, help="edge-list path")
    sp.add_argument("--indexing", type=int, choices=[0, 1], default=0)
    sp.add_argument("--weighted", action="store_true")
    sp.add_argument("--no-symmetrize", action="store_true")
    sp.add_argument("--alpha-b", type=float, default=1e8)
    sp.add_argument("--alpha-t", type=int, default=1000)
    sp.add_argument("--beta", type=float, default=1.0)
    sp.add_argument("--dense-cap", type=int, default=5000)
    _add_common(sp, theta_default="log:1e-3:1e3:30")

    sp = subs.add_parser("multi-sample", help="variance scaling with averaged observations")
    _add_family(sp)
    sp.add_argument("--alpha", type=float, default=1.0)
    sp.add_argument("--T", type=_int_list, default=[1, 2, 4, 8])
    sp.add_argument("--sigma", type=float, default=1.0)
    _add_common(sp, theta_default=None)

    sp = subs.add_parser("band-limited", help="MSE invariance under the constant-basis weight")
    _add_family(sp, default="ws")
    sp.add_argument("--active", type=_coeff_list, default=[(2, 3.0), (5, 2.0), (10, 1.0)],
                    help="active basis as index:weight,... (1-based)")
    sp.add_argument("--omega1", type=_float_list, default=[-10.0, 0.0, 10.0])
    sp.add_argument("--alphas", type=_float_list, default=[0.1, 1.0, 10.0])
    sp.add_argument("--sigma", type=float, default=1.0)
    _add_common(sp, theta_default=None)

    return parser


def _dispatch(args) -> tuple:
    """Run the scenario; returns (table, default chart spec)."""
    if args.command == "mse-vs-p":
        table = experiments.run_mse_vs_p(
            n=args.n, p_values=args.p, alphas=args.alphas, sigma=args.sigma,
            mu=args.mu, realizations=args.realizations, seed=args.seed,
        )
        return table, dict(x="p", ys=["pernode_mse", "pernode_mse_ub"], series_by="alpha")
    if args.command == "alpha-vs-theta":
        table = experiments.run_alpha_vs_theta(
            family=args.family, n=args.n, p=args.p, d=args.d, q=args.q, w=args.w,
            thetas=args.theta, b=args.alpha_b, t=args.alpha_t, beta=args.beta,
            realizations=args.realizations, mu=args.mu, seed=args.seed,
        )
        return table, dict(
            x="theta", ys=["alpha_star_mse", "alpha_star_ub", "alpha_predicted"],
            log_x=True, log_y=True,
        )
    if args.command == "real-graph":
        table = experiments.run_real_graph(
            path=args.graph, indexing=args.indexing, weighted=args.weighted,
            symmetrize=not args.no_symmetrize, thetas=args.theta, b=args.alpha_b,
            t=args.alpha_t, beta=args.beta, realizations=args.realizations,
            mu=args.mu, seed=args.seed, dense_cap=args.dense_cap,
        )
        ys = ["alpha_star_ub", "alpha_predicted"]
        if "alpha_star_mse" in table.columns:
            ys.insert(0, "alpha_star_mse")
        return table, dict(x="theta", ys=ys, log_x=True, log_y=True)
    if args.command == "multi-sample":
        table = experiments.run_multi_sample(
            family=args.family, n=args.n, p=args.p, d=args.d, q=args.q, w=args.w,
            alpha=args.alpha, sample_counts=args.T, sigma=args.sigma, mu=args.mu,
            realizations=args.realizations, seed=args.seed,
        )
        return table, dict(x="samples", ys=["pernode_mse", "pernode_mse_empirical"])
    if args.command == "band-limited":
        table = experiments.run_band_limited(
            family=args.family, n=args.n, p=args.p, d=args.d, q=args.q, w=args.w,
            active=args.active, omega1_values=args.omega1, alphas=args.alphas,
            sigma=args.sigma, seed=args.seed,
        )
        return table, dict(x="omega1", ys=["pernode_mse"], series_by="alpha")
    raise AssertionError(f"unhandled command {args.command}")


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        table, chart = _dispatch(args)
    except (GraphError, EdgeListParseError, GenerationError, OSError) as exc:
        print(f"lapreg: data error: {exc}", file=sys.stderr)
        return 2
    except (EigenError, ConvergenceError, SolveError, np.linalg.LinAlgError) as exc:
        print(f"lapreg: numerical failure: {exc}", file=sys.stderr)
        return 3

    write_csv(table, args.out_csv if args.out_csv else sys.stdout)
    if args.out_svg:
        render_svg(table, args.out_svg, title=args.command, **chart)
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Command-line front end.

Subcommands: compute (bound report for two state files), figure (CSV data
for the three standard plots), verify (randomized property suite), witness
(export saturating state pairs). CSV output uses '.' decimals, ',' separators,
a header row, and LF line endings so diffs are bit-exact.
"""
from __future__ import annotations

import argparse
import json
import math
import sys
from pathlib import Path

from ._backend import BACKEND
from .bounds import (
    CSV_HEADER,
    _fmt,
    _upper_log_value,
    bound_report,
    s_of_x,
    upper_bound_sharp_d2,
    upper_bound_sharp_dgt2,
)
from .entropy import relative_entropy
from .harness import SuiteConfig, run_suite
from .norms import NormKind
from .states import load_density_json, save_matrix_json

_STEP = 0.005


def _grid(stop: float) -> list[float]:
    # i*step can overshoot stop in the last bit; clamp so bound
    # preconditions (T <= 1 - beta) hold exactly at the endpoint
    n = int(round(stop / _STEP))
    return [min(i * _STEP, stop) for i in range(n + 1)]


def fig1_rows() -> list[tuple[float, float, float, float]]:
    """Rows (x, s(x), 2x^2, -log(1-x)) for x in [0, 0.995]."""
    rows = []
    for x in _grid(0.995):
        rows.append((x, s_of_x(x), 2.0 * x * x, -math.log1p(-x)))
    return rows


FIG_BETAS = (0.1, 0.2, 0.3, 0.4, 0.5)


def fig2_rows(beta: float) -> list[tuple[float, float]]:
    """Rows (T, d=2 sharp bound) for T in [0, 1-beta]."""
    return [(t, upper_bound_sharp_d2(t, beta)) for t in _grid(1.0 - beta)]


def fig3_rows(beta: float) -> list[tuple[float, float, float]]:
    """Rows (T, log-form bound at d=3, sharp d>2 bound), T halved trace distance."""
    rows = []
    for t in _grid(1.0 - beta):
        rows.append(
            (t, _upper_log_value(2.0 * t, beta, 3), upper_bound_sharp_dgt2(t, beta))
        )
    return rows


def _write_csv(path: Path, header: str, rows) -> None:
    lines = [header]
    lines.extend(",".join(_fmt(v) for v in row) for row in rows)
    path.parent.mkdir(parents=True, exist_ok=True)
    path.write_text("\n".join(lines) + "\n", encoding="ascii", newline="\n")


def _beta_path(out: Path, beta: float) -> Path:
    return out.with_name(f"{out.stem}_beta{beta:g}{out.suffix or '.csv'}")


def cmd_compute(args) -> int:
    rho = load_density_json(args.rho)
    sigma = load_density_json(args.sigma)
    kinds = tuple(NormKind.parse(k) for k in args.norm)
    report = bound_report(rho, sigma, extra_kinds=kinds)
    if args.csv:
        sys.stdout.write(CSV_HEADER + "\n" + report.csv_row() + "\n")
    else:
        sys.stdout.write(json.dumps(report.to_json_dict(), indent=2, sort_keys=True) + "\n")
    return 0


def cmd_figure(args) -> int:
    out = Path(args.out)
    written: list[Path] = []
    if args.which == 1:
        _write_csv(out, "x,s,lower_2x2,upper_neglog", fig1_rows())
        written.append(out)
    elif args.which == 2:
        for beta in FIG_BETAS:
            p = _beta_path(out, beta)
            _write_csv(p, "T,bound", fig2_rows(beta))
            written.append(p)
    else:
        for beta in FIG_BETAS:
            p = _beta_path(out, beta)
            _write_csv(p, "T,bound_log_d3,sharp_dgt2", fig3_rows(beta))
            written.append(p)
    for p in written:
        sys.stdout.write(str(p) + "\n")
    return 0


def cmd_verify(args) -> int:
    cfg = SuiteConfig(
        seed=args.seed,
        samples_per_case=args.samples,
        dims=tuple(args.dims),
        slack=args.slack,
    )
    report = run_suite(cfg)
    sys.stdout.write(report.to_json())
    return 0 if report.verdict == "pass" else 1


def cmd_witness(args) -> int:
    outdir = Path(args.out)
    outdir.mkdir(parents=True, exist_ok=True)
    if args.family == "lower":
        from .witnesses import witness_lower

        rho, sigma = witness_lower(args.T, args.dim)
        bound = s_of_x(args.T)
    else:
        from .witnesses import witness_upper_T_gt_beta, witness_upper_T_le_beta

        if args.beta is None:
            raise ValueError("--beta is required for the upper witness family")
        if args.T <= args.beta:
            rho, sigma = witness_upper_T_le_beta(args.T, args.beta, args.dim)
        else:
            rho, sigma = witness_upper_T_gt_beta(args.T, args.beta, args.dim, args.J)
        bound = upper_bound_sharp_dgt2(args.T, args.beta)
    rho_path = outdir / "rho.json"
    sigma_path = outdir / "sigma.json"
    save_matrix_json(rho_path, rho.mat)
    save_matrix_json(sigma_path, sigma.mat)
    summary = {
        "family": args.family,
        "dim": args.dim,
        "T": args.T,
        "beta": args.beta,
        "rho": str(rho_path),
        "sigma": str(sigma_path),
        "bound": _fmt(bound),
        "exact": _fmt(relative_entropy(rho.mat, sigma.mat)),
    }
    sys.stdout.write(json.dumps(summary, indent=2, sort_keys=True) + "\n")
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="relbound",
        description="Distance measures and relative-entropy continuity bounds "
        f"for density matrices (linear algebra backend: {BACKEND}).",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("compute", help="bound report for a pair of state files")
    p.add_argument("rho", help="JSON file holding the first density matrix")
    p.add_argument("sigma", help="JSON file holding the second density matrix")
    p.add_argument(
        "--norm",
        action="append",
        default=[],
        metavar="KIND",
        help="extra norm kind (trace, operator, kyfan:k, schatten:q); repeatable",
    )
    p.add_argument("--csv", action="store_true", help="emit CSV instead of JSON")
    p.set_defaults(func=cmd_compute)

    p = sub.add_parser("figure", help="write figure data as CSV")
    p.add_argument("which", type=int, choices=(1, 2, 3))
    p.add_argument("out", help="output path; figures 2 and 3 write one file per beta")
    p.set_defaults(func=cmd_figure)

    p = sub.add_parser("verify", help="run the randomized property suite")
    p.add_argument("--seed", type=int, default=42)
    p.add_argument("--samples", type=int, default=10_000)
    p.add_argument("--dims", type=int, nargs="+", default=[2, 3, 4, 5])
    p.add_argument("--slack", type=float, default=1e-9)
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("witness", help="export a saturating state pair")
    p.add_argument("family", choices=("lower", "upper"))
    p.add_argument("--dim", type=int, required=True)
    p.add_argument("--T", type=float, required=True, help="target distance")
    p.add_argument("--beta", type=float, default=None, help="smallest sigma eigenvalue")
    p.add_argument("--J", type=int, default=0, help="degeneracy split for T > beta")
    p.add_argument("--out", required=True, help="directory for rho.json / sigma.json")
    p.set_defaults(func=cmd_witness)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except (ValueError, OSError) as exc:
        sys.stderr.write(f"relbound: error: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())

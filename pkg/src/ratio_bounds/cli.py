"""Command-line front end.

    ratio-bounds eval coshcos --x 0.5 --alpha 1.0 --k0 0
    ratio-bounds verify --suite all --grid 64 --tol 1e-12 --out report.json
    ratio-bounds sweep --family coshcos --alpha 1.0 --k0-list -1,0,2 --points 5

Exit codes: 0 success, 1 verification violation, 2 usage or domain error.
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import bound_family as bf
from .errors import AccuracyError, DomainError
from .reference_oracle import ratio_coshcos, ratio_sinhsin
from .special_series import SeriesConfig, lambda_sum_closed, lambda_sum_upper
from .verification import SUITES, GridSpec, run_suite, unit_grid

MAX_TERMS_ENV = "RATIO_BOUNDS_MAX_TERMS"


class UsageError(Exception):
    pass


def _k0_list(text: str) -> list[int]:
    try:
        values = [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"not a comma-separated integer list: {text!r}")
    if not values:
        raise argparse.ArgumentTypeError("k0 list is empty")
    return values


def _series_config() -> SeriesConfig:
    raw = os.environ.get(MAX_TERMS_ENV)
    if raw is None:
        return SeriesConfig()
    try:
        return SeriesConfig(max_terms=int(raw))
    except (ValueError, DomainError):
        raise UsageError(f"{MAX_TERMS_ENV} must be a positive integer, got {raw!r}")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="ratio-bounds",
        description="Upper bounds for cosh x/cos x and sinh x/sin x and their numerical verification.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    ev = sub.add_parser("eval", help="evaluate one bound at a point")
    kinds = ev.add_subparsers(dest="kind", required=True)
    p = kinds.add_parser("lemma", help="Bernoulli-type log bound")
    p.add_argument("--u", type=float, required=True)
    p.add_argument("--v", type=float, required=True)
    p.add_argument("--k0", type=int, default=0)
    for name in ("coshcos", "sinhsin"):
        p = kinds.add_parser(name, help=f"{name} bound b_k0")
        p.add_argument("--x", type=float, required=True)
        p.add_argument("--alpha", type=float, required=True)
        p.add_argument("--k0", type=int, default=0)
    p = kinds.add_parser("limit", help="k0 -> infinity cosh/cos bound")
    p.add_argument("--x", type=float, required=True)
    p = kinds.add_parser("envelope", help="exp(beta x^2) envelope")
    p.add_argument("--x", type=float, required=True)
    p.add_argument("--alpha", type=float, required=True)
    p = kinds.add_parser("beta", help="best exponential constant")
    p.add_argument("--alpha", type=float, required=True)
    p = kinds.add_parser("lambda", help="odd-denominator sum I_k and its upper bound")
    p.add_argument("--k", type=int, required=True)

    ver = sub.add_parser("verify", help="run verification sweeps")
    ver.add_argument("--suite", choices=("all",) + SUITES, default="all")
    ver.add_argument("--grid", type=int, default=64, help="points per grid axis")
    ver.add_argument("--tol", type=float, default=1e-12)
    ver.add_argument("--out", default=None, help="write the JSON report here")

    sw = sub.add_parser("sweep", help="tabulate bounds against x")
    sw.add_argument("--family", choices=("coshcos", "sinhsin"), default="coshcos")
    sw.add_argument("--alpha", type=float, default=1.0)
    sw.add_argument("--k0-list", type=_k0_list, default=[-1, 0, 1, 2])
    sw.add_argument("--points", type=int, default=50)
    sw.add_argument("--format", choices=("csv", "json"), default="csv")
    return parser


def cmd_eval(args) -> dict:
    kind = args.kind
    if kind == "lemma":
        q = bf.LemmaQuery(args.u, args.v, args.k0)
        return bf.evaluate(q).as_dict()
    if kind in ("coshcos", "sinhsin"):
        q = bf.RatioQuery(args.x, args.alpha, args.k0, bf.Family(kind))
        return bf.evaluate(q).as_dict()
    if kind == "limit":
        return bf.EvalResult(bf.coshcos_limit_bound(args.x), ratio_coshcos(args.x)).as_dict()
    if kind == "envelope":
        return bf.EvalResult(bf.exp_envelope(args.x, args.alpha), ratio_coshcos(args.x)).as_dict()
    if kind == "beta":
        return {"bound": bf.best_exp_constant(args.alpha)}
    if kind == "lambda":
        cfg = _series_config()
        return {"bound": lambda_sum_upper(args.k), "value": lambda_sum_closed(args.k, cfg)}
    raise UsageError(f"unknown eval kind {kind!r}")


def cmd_verify(args, out=None) -> int:
    out = sys.stdout if out is None else out
    if args.grid < 1:
        raise UsageError(f"--grid must be >= 1, got {args.grid}")
    if not args.tol > 0:
        raise UsageError(f"--tol must be > 0, got {args.tol}")
    grid = GridSpec(points_per_axis=args.grid)
    reports = run_suite(args.suite, grid, args.tol, _series_config())
    passed = all(r.passed for r in reports)
    if args.out is not None:
        payload = {"passed": passed, "reports": [r.to_dict() for r in reports]}
        try:
            with open(args.out, "w", encoding="utf-8", newline="\n") as fh:
                json.dump(payload, fh, indent=2)
                fh.write("\n")
        except OSError as exc:
            raise UsageError(f"cannot write {args.out}: {exc.strerror or exc}")
    for r in reports:
        status = "PASS" if r.passed else "FAIL"
        out.write(
            f"{status} {r.check_name}: cases={r.cases_run} worst_margin={r.worst_margin!r} "
            f"violations={len(r.violations)}\n"
        )
    return 0 if passed else 1


def sweep_table(family: str, alpha: float, k0_list: list[int], points: int) -> tuple[list[str], list[list[float]]]:
    """Header and rows for a sweep over ``x = alpha * t`` on the inset unit grid."""
    if points < 1:
        raise UsageError(f"--points must be >= 1, got {points}")
    for k0 in k0_list:
        bf._check_k0(k0)
    columns = ["x", "reference"] + [f"b_k{k0}" for k0 in k0_list]
    if family == "coshcos":
        columns += ["limit", "envelope"]
    rows = []
    for t in unit_grid(points, 1e-3):
        x = alpha * t
        if family == "coshcos":
            row = [x, ratio_coshcos(x)] + [bf.coshcos_bound(x, alpha, k0) for k0 in k0_list]
            row += [bf.coshcos_limit_bound(x), bf.exp_envelope(x, alpha)]
        else:
            row = [x, ratio_sinhsin(x)] + [bf.sinhsin_bound(x, alpha, k0) for k0 in k0_list]
        rows.append(row)
    return columns, rows


def cmd_sweep(args) -> str:
    columns, rows = sweep_table(args.family, args.alpha, args.k0_list, args.points)
    if args.format == "json":
        return json.dumps({"columns": columns, "rows": rows}) + "\n"
    lines = [",".join(columns)]
    lines += [",".join(f"{value:.17g}" for value in row) for row in rows]
    return "\n".join(lines) + "\n"


def _glue_k0_list(argv: list[str]) -> list[str]:
    # argparse reads a value such as "-1,0,2" as an option; attach it with "="
    out = []
    i = 0
    while i < len(argv):
        if argv[i] == "--k0-list" and i + 1 < len(argv):
            out.append(f"--k0-list={argv[i + 1]}")
            i += 2
        else:
            out.append(argv[i])
            i += 1
    return out


def main(argv=None) -> int:
    parser = build_parser()
    argv = sys.argv[1:] if argv is None else list(argv)
    try:
        args = parser.parse_args(_glue_k0_list(argv))
    except SystemExit as exc:
        return 0 if exc.code in (0, None) else 2
    try:
        if args.command == "eval":
            sys.stdout.write(json.dumps(cmd_eval(args)) + "\n")
            return 0
        if args.command == "verify":
            return cmd_verify(args)
        sys.stdout.write(cmd_sweep(args))
        return 0
    except (UsageError, DomainError, AccuracyError) as exc:
        parser.print_usage(sys.stderr)
        sys.stderr.write(f"{parser.prog}: error: {exc}\n")
        return 2


if __name__ == "__main__":
    sys.exit(main())

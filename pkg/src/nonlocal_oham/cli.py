"""Command-line front end.

Exit codes: 0 success, 1 usage, 2 problem/config parse, 3 solver, 4 c0 search infeasible.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .analysis import ResultTable, check_bound, measure_deltas, result_table
from .compare import discrepancy_report
from .config import OPTIMIZE, PStrategy, SolverConfig
from .oham import build_series
from .problem import NonpositiveNonlocalCoefficient, ProblemError, builtin, load_problem
from .residual import OptimizationInfeasible, optimize_c0, residual_at

EXIT_USAGE, EXIT_PARSE, EXIT_SOLVER, EXIT_INFEASIBLE = 1, 2, 3, 4

SOLVE_HEADER = ("x", "exact", "adm", "oham", "err_adm", "err_oham")


class UsageError(Exception):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        raise UsageError(message)


def fmt_csv(v) -> str:
    return "" if v is None else f"{v:.14e}"


def fmt_md(v) -> str:
    return "-" if v is None else f"{v:.9g}"


def _c0_arg(text: str):
    if text == OPTIMIZE:
        return OPTIMIZE
    try:
        value = float(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected 'optimal' or a number, got {text!r}")
    if value == 0:
        raise argparse.ArgumentTypeError("c0 must be nonzero")
    return value


def _grid_arg(text: str):
    try:
        lo, hi, step = (float(s) for s in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"grid must look like a:b:step, got {text!r}")
    if step <= 0 or hi < lo or lo < 0 or hi > 1:
        raise argparse.ArgumentTypeError("grid needs 0 <= a <= b <= 1 and step > 0")
    n = int(round((hi - lo) / step))
    return [round(lo + i * step, 12) for i in range(n + 1)]


def _bracket_arg(text: str):
    try:
        lo, hi = (float(s) for s in text.split(":"))
    except ValueError:
        raise argparse.ArgumentTypeError(f"bracket must look like lo:hi, got {text!r}")
    return lo, hi


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(prog="nonlocal-oham",
                     description="Series solutions of nonlocal elliptic two-point problems.")
    parser.add_argument("--version", action="version", version=__version__)
    sub = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def common(p, grid=True):
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--example", type=int, choices=(1, 2, 3, 4))
        src.add_argument("--config", type=Path)
        p.add_argument("--order", type=int, default=2)
        p.add_argument("--p-strategy", choices=[s.value for s in PStrategy],
                       default=PStrategy.FROZEN.value)
        p.add_argument("--m-points", type=int, default=100)
        p.add_argument("--bracket", type=_bracket_arg, default=(-1.95, -0.05))
        p.add_argument("--format", choices=("csv", "md"))
        p.add_argument("--out", type=Path)
        if grid:
            p.add_argument("--grid", type=_grid_arg, default=_grid_arg("0:1:0.1"))

    p = sub.add_parser("solve", help="ADM/OHAM table against the exact solution")
    common(p)
    p.add_argument("--c0", type=_c0_arg, default=OPTIMIZE)

    p = sub.add_parser("sweep", help="E_n(c0) on an equispaced c0 range")
    common(p, grid=False)
    p.add_argument("--from", dest="c0_from", type=float, required=True)
    p.add_argument("--to", dest="c0_to", type=float, required=True)
    p.add_argument("--steps", type=int, required=True)

    p = sub.add_parser("residual", help="E_n at one c0")
    common(p, grid=False)
    p.add_argument("--c0", type=_c0_arg, default=OPTIMIZE)

    p = sub.add_parser("diagnose", help="term-ratio convergence report and error bound")
    common(p, grid=False)
    p.add_argument("--c0", type=_c0_arg, default=OPTIMIZE)
    p.add_argument("--norm-grid", type=int, default=201)

    p = sub.add_parser("compare", help="comparison with the published benchmark tables")
    p.add_argument("--order", type=int, default=2)
    p.add_argument("--out", type=Path)
    return parser


def _problem(args):
    if args.example is not None:
        return builtin(args.example), f"example {args.example}"
    return load_problem(args.config), str(args.config)


def _config(args, **extra) -> SolverConfig:
    kwargs = dict(order=args.order, p_strategy=PStrategy(args.p_strategy),
                  residual_points=args.m_points, bracket=tuple(args.bracket))
    if getattr(args, "c0", None) is not None:
        kwargs["c0"] = args.c0
    kwargs.update(extra)
    try:
        return SolverConfig(**kwargs)
    except ValueError as exc:
        raise UsageError(str(exc)) from None


def _format(args) -> str:
    return args.format or ("csv" if args.out else "md")


def _csv(header, rows) -> str:
    lines = [",".join(header)] + [",".join(r) for r in rows]
    return "\n".join(lines) + "\n"


def _md(header, rows) -> str:
    lines = ["| " + " | ".join(header) + " |", "|" + "---|" * len(header)]
    lines += ["| " + " | ".join(r) + " |" for r in rows]
    return "\n".join(lines) + "\n"


def render_table(table: ResultTable, fmt: str) -> str:
    f = fmt_csv if fmt == "csv" else fmt_md
    rows = [[f(r.x), f(r.exact), f(r.adm), f(r.oham), f(r.err_adm), f(r.err_oham)]
            for r in table.rows]
    if fmt == "csv":
        return _csv(SOLVE_HEADER, rows)
    m = table.metadata
    head = (f"problem: {m['source']}; order {m['order']}; strategy {m['strategy']}; "
            f"M = {m['M']}; c0 (ADM) = -1; c0 (OHAM) = {fmt_md(m['c0_oham'])}\n\n")
    return head + _md(SOLVE_HEADER, rows)


def run_solve(args) -> str:
    spec, source = _problem(args)
    table = result_table(spec, _config(args), args.grid, source=source)
    return render_table(table, _format(args))


def run_sweep(args) -> str:
    if args.steps < 2:
        raise UsageError("--steps must be >= 2")
    if not args.c0_from < 0 or not args.c0_to < 0:
        raise UsageError("sweep range must lie in c0 < 0")
    spec, _ = _problem(args)
    cfg = _config(args)
    rows, failed = [], False
    for c0 in np.linspace(args.c0_from, args.c0_to, args.steps):
        try:
            rows.append((float(c0), residual_at(spec, cfg, float(c0)).E, None))
        except (NonpositiveNonlocalCoefficient, OverflowError) as exc:
            rows.append((float(c0), None, str(exc).replace(",", ";")))
            failed = True
    header = ("c0", "E", "error") if failed else ("c0", "E")
    if _format(args) == "csv":
        f = fmt_csv
        out = [[f(c), f(E)] + ([err or ""] if failed else []) for c, E, err in rows]
        return _csv(header, out)
    out = [[fmt_md(c), fmt_md(E)] + ([err or ""] if failed else []) for c, E, err in rows]
    return _md(header, out)


def run_residual(args) -> str:
    spec, _ = _problem(args)
    c0, report = optimize_c0(spec, _config(args))
    if _format(args) == "csv":
        return _csv(("c0", "E"), [[fmt_csv(c0), fmt_csv(report.E)]])
    return _md(("c0", "E"), [[fmt_md(c0), fmt_md(report.E)]])


def run_diagnose(args) -> str:
    spec, source = _problem(args)
    cfg = _config(args, norm_grid=args.norm_grid)
    c0, _ = optimize_c0(spec, cfg)
    series = build_series(spec, cfg, c0)
    rep = measure_deltas(series, cfg.norm_grid)
    chk = check_bound(series, rep, cfg.norm_grid)
    fields = [
        ("problem", source),
        ("order", str(cfg.order)),
        ("strategy", cfg.p_strategy.value),
        ("c0", fmt_csv(c0)),
        ("norms", " ".join(fmt_csv(n) for n in rep.norms)),
        ("deltas", " ".join("undefined" if d is None else fmt_csv(d) for d in rep.deltas)),
        ("all_deltas_below_one", "yes" if all(d is None or d < 1 for d in rep.deltas) else "no"),
        ("k0", "none" if rep.k0 is None else str(rep.k0)),
        ("delta_max", fmt_csv(rep.delta_max) if rep.delta_max is not None else "none"),
        ("bound", fmt_csv(rep.bound) if rep.bound is not None else "none"),
    ]
    if chk is not None:
        fields += [("max_error", fmt_csv(chk.max_error)),
                   ("within_bound", "no (flagged: ratio hypothesis fails)" if chk.flagged
                    else "yes")]
    if _format(args) == "csv":
        return _csv(("field", "value"), [[k, v] for k, v in fields])
    return _md(("field", "value"), [[k, v] for k, v in fields])


COMMANDS = {"solve": run_solve, "sweep": run_sweep, "residual": run_residual,
            "diagnose": run_diagnose}


def _emit(text: str, out: Path | None):
    if out is None:
        sys.stdout.write(text)
    else:
        with open(out, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def main(argv=None) -> int:
    try:
        args = build_parser().parse_args(argv)
        if args.command == "compare":
            text = discrepancy_report(args.order)
        else:
            if args.order < 1:
                raise UsageError("--order must be >= 1")
            text = COMMANDS[args.command](args)
        _emit(text, args.out)
    except UsageError as exc:
        print(f"usage error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ProblemError as exc:
        print(f"problem error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    except OptimizationInfeasible as exc:
        print(f"c0 search infeasible: {exc}", file=sys.stderr)
        return EXIT_INFEASIBLE
    except (NonpositiveNonlocalCoefficient, OverflowError, ValueError) as exc:
        print(f"solver error: {exc}", file=sys.stderr)
        return EXIT_SOLVER
    except OSError as exc:
        print(f"i/o error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    return 0


if __name__ == "__main__":
    sys.exit(main())

"""Convergence diagnostics and exact-vs-computed error tables."""

from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .config import SolverConfig
from .oham import HomotopySeries, build_series
from .poly import max_abs_on_grid, uniform_grid
from .problem import ExactKind, ProblemSpec
from .residual import optimize_c0

DEFAULT_GRID = tuple(round(0.1 * i, 10) for i in range(11))
BOUND_SLACK = 1e-6


@dataclass(frozen=True)
class ConvergenceReport:
    """Observed ratios ``delta_k = ||y_{k+1}|| / ||y_k||``.

    ``deltas[k]`` is ``None`` when ``||y_k|| = 0``.  ``k0`` is the first index
    from which every defined ratio stays below one; ``delta_max`` is the
    largest ratio from ``k0`` on.
    """

    norms: tuple[float, ...]
    deltas: tuple[float | None, ...]
    k0: int | None
    delta_max: float | None
    bound: float | None
    order: int

    @property
    def contracting(self) -> bool:
        return self.bound is not None


def error_bound(report: ConvergenceReport, m: int, norm_yk0: float) -> float | None:
    """``delta**(m - k0 + 1) / (1 - delta) * ||y_k0||``, or ``None`` if delta >= 1."""
    d = report.delta_max
    if d is None or report.k0 is None or d >= 1.0:
        return None
    if report.k0 > m:
        raise ValueError(f"k0 = {report.k0} exceeds truncation order {m}")
    return d ** (m - report.k0 + 1) / (1.0 - d) * norm_yk0


def measure_deltas(series: HomotopySeries, norm_grid: int = 201) -> ConvergenceReport:
    if len(series.stages) < 2:
        raise ValueError("need at least two stages to form a ratio")
    norms = tuple(max_abs_on_grid(s.y, norm_grid) for s in series.stages)
    n = series.order
    deltas = tuple(norms[k + 1] / norms[k] if norms[k] > 0 else None for k in range(n))

    k0 = None
    for start in range(n):
        tail = [d for d in deltas[start:] if d is not None]
        if all(d < 1.0 for d in tail):
            k0 = start
            break
    if k0 is None:
        return ConvergenceReport(norms, deltas, None, None, None, n)
    tail = [d for d in deltas[k0:] if d is not None]
    delta_max = max(tail) if tail else 0.0
    partial = ConvergenceReport(norms, deltas, k0, delta_max, None, n)
    bound = error_bound(partial, n, norms[k0])
    return ConvergenceReport(norms, deltas, k0, delta_max, bound, n)


@dataclass(frozen=True)
class BoundCheck:
    max_error: float
    bound: float
    flagged: bool   # observed error exceeds the bound: the sampled ratio hypothesis failed


def check_bound(series: HomotopySeries, report: ConvergenceReport,
                norm_grid: int = 201) -> BoundCheck | None:
    """Compare the a-posteriori bound with the true error; ``None`` if either is unavailable."""
    spec = series.problem
    if report.bound is None or spec.exact.kind is ExactKind.NONE:
        return None
    xs = uniform_grid(norm_grid)
    err = float(np.max(np.abs(spec.exact(xs) - series.partial_sum()(xs))))
    return BoundCheck(err, report.bound, err > report.bound * (1.0 + BOUND_SLACK))


@dataclass(frozen=True)
class TableRow:
    x: float
    exact: float | None
    adm: float
    oham: float
    err_adm: float | None
    err_oham: float | None


@dataclass(frozen=True)
class ResultTable:
    rows: tuple[TableRow, ...]
    metadata: dict = field(default_factory=dict)

    def max_err(self, column: str) -> float | None:
        vals = [getattr(r, column) for r in self.rows]
        if any(v is None for v in vals):
            return None
        return max(vals)


def result_table(spec: ProblemSpec, config: SolverConfig, grid=DEFAULT_GRID,
                 source: str = "") -> ResultTable:
    """ADM (c0 = -1) and OHAM columns at the same order and p-strategy."""
    grid = sorted(float(x) for x in grid)
    if any(not 0.0 <= x <= 1.0 for x in grid):
        raise ValueError("table grid points must lie in [0, 1]")
    c0, report = optimize_c0(spec, config)
    adm = build_series(spec, config, -1.0).partial_sum()
    oham = build_series(spec, config, c0).partial_sum()

    rows = []
    for x in grid:
        ex = spec.exact(x)
        ya, yo = adm(x), oham(x)
        rows.append(TableRow(x, ex, ya, yo,
                             None if ex is None else abs(ex - ya),
                             None if ex is None else abs(ex - yo)))
    meta = {
        "source": source or spec.name,
        "order": config.order,
        "c0_adm": -1.0,
        "c0_oham": c0,
        "E_oham": report.E,
        "strategy": config.p_strategy.value,
        "M": config.residual_points,
    }
    return ResultTable(tuple(rows), meta)

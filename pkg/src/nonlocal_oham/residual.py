"""Equation residual of a candidate solution and the choice of ``c0``.

``N[phi](x) = phi(x) - (a + (b - a) x) - K[f(., phi)](x) / alpha(int phi)``.
``E_n(c0)`` is the mean of ``N[phi_n]**2`` over ``x_k = k/M``, k = 1..M,
and ``c0`` is chosen by a bracketed scan followed by golden-section search.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, replace

import numpy as np

from .config import OPTIMIZE, SolverConfig
from .kernel import apply_green
from .oham import build_series
from .poly import Polynomial, evaluate, integrate01
from .problem import NonpositiveNonlocalCoefficient, ProblemSpec, alpha

WIDE_BRACKET = (-4.0, -0.01)
_INV_PHI = (math.sqrt(5.0) - 1.0) / 2.0


class OptimizationInfeasible(RuntimeError):
    pass


@dataclass(frozen=True)
class ResidualReport:
    c0: float | None
    E: float
    pointwise: tuple[tuple[float, float], ...]
    p_of_phi: float


def residual_polynomial(spec: ProblemSpec, phi: Polynomial) -> Polynomial:
    """``N[phi]`` as a polynomial, always with the full nonlocal value ``int phi``."""
    p = integrate01(phi)
    return phi - spec.boundary_line - apply_green(spec.rhs(phi)) / alpha(spec, p)


def residual_operator(spec: ProblemSpec, phi: Polynomial, x: float) -> float:
    return evaluate(residual_polynomial(spec, phi), x)


def discrete_residual(spec: ProblemSpec, phi: Polynomial, M: int,
                      c0: float | None = None) -> ResidualReport:
    xs = np.arange(1, M + 1) / M
    values = evaluate(residual_polynomial(spec, phi), xs)
    E = float(np.mean(values ** 2))
    return ResidualReport(c0, E, tuple(zip(xs.tolist(), values.tolist())), integrate01(phi))


def residual_at(spec: ProblemSpec, config: SolverConfig, c0: float) -> ResidualReport:
    """Build the order-n series at ``c0`` and measure its residual."""
    phi = build_series(spec, config, c0).partial_sum()
    return discrete_residual(spec, phi, config.residual_points, c0)


def _objective(spec, config, c0):
    try:
        return residual_at(spec, config, c0).E
    except (NonpositiveNonlocalCoefficient, OverflowError, ZeroDivisionError):
        return math.inf


def _scan(spec, config, bracket, n):
    lo, hi = bracket
    cs = set(np.linspace(lo, hi, n).tolist())
    if lo <= -1.0 <= hi:
        cs.add(-1.0)
    cs = sorted(cs)
    return cs, [_objective(spec, config, c) for c in cs]


def _best_index(cs, Es):
    # ties go to the smaller |c0|
    return min(range(len(cs)), key=lambda i: (Es[i], abs(cs[i])))


def golden_section(f, lo: float, hi: float, tol: float, f_lo=None, f_hi=None):
    """Shrink ``[lo, hi]`` around a minimum of ``f`` until narrower than ``tol``.

    Returns the best point evaluated and its value.
    """
    seen = []
    c = hi - _INV_PHI * (hi - lo)
    d = lo + _INV_PHI * (hi - lo)
    fc, fd = f(c), f(d)
    seen += [(fc, c), (fd, d)]
    while hi - lo >= tol:
        if fc <= fd:
            hi, d, fd = d, c, fc
            c = hi - _INV_PHI * (hi - lo)
            fc = f(c)
            seen.append((fc, c))
        else:
            lo, c, fc = c, d, fd
            d = lo + _INV_PHI * (hi - lo)
            fd = f(d)
            seen.append((fd, d))
    if f_lo is not None:
        seen.append((f_lo, lo))
    if f_hi is not None:
        seen.append((f_hi, hi))
    fbest, xbest = min(seen)
    return xbest, fbest


def _parabolic_polish(f, xs, fs):
    """One parabola-vertex step through three points; ``None`` if degenerate."""
    (x0, x1, x2), (f0, f1, f2) = xs, fs
    den = (x1 - x0) * (f1 - f2) - (x1 - x2) * (f1 - f0)
    if den == 0 or not all(map(math.isfinite, fs)):
        return None
    num = (x1 - x0) ** 2 * (f1 - f2) - (x1 - x2) ** 2 * (f1 - f0)
    x = x1 - 0.5 * num / den
    if not min(x0, x2) <= x <= max(x0, x2):
        return None
    return x, f(x)


def optimize_c0(spec: ProblemSpec, config: SolverConfig) -> tuple[float, ResidualReport]:
    """Minimise ``E_n(c0)``; in fixed mode just evaluate at the configured value."""
    if not config.optimize:
        c0 = float(config.c0)
        return c0, residual_at(spec, config, c0)

    f = lambda c: _objective(spec, config, c)
    bracket = config.bracket
    cs, Es = _scan(spec, config, bracket, config.scan_points)
    i = _best_index(cs, Es)
    if i in (0, len(cs) - 1) and bracket != WIDE_BRACKET:
        step = (bracket[1] - bracket[0]) / (config.scan_points - 1)
        n = int(round((WIDE_BRACKET[1] - WIDE_BRACKET[0]) / step)) + 1
        bracket = WIDE_BRACKET
        cs, Es = _scan(spec, config, bracket, n)
        i = _best_index(cs, Es)
    if all(math.isinf(E) for E in Es):
        raise OptimizationInfeasible(
            f"E_n(c0) could not be evaluated anywhere in {bracket}")
    if i in (0, len(cs) - 1):
        raise OptimizationInfeasible(
            f"residual minimum lies on the edge of the search bracket {bracket} (c0 = {cs[i]})")

    # E_n can have several basins; refine every interior local minimum of the scan
    c_best, E_best = cs[i], Es[i]
    for j in range(1, len(cs) - 1):
        if not (math.isfinite(Es[j]) and Es[j] <= Es[j - 1] and Es[j] <= Es[j + 1]):
            continue
        c, E = golden_section(f, cs[j - 1], cs[j + 1], config.opt_tol, Es[j - 1], Es[j + 1])
        if (E, abs(c)) < (E_best, abs(c_best)):
            c_best, E_best = c, E
    # the golden-section interval limits c0 to ~opt_tol; E is locally quadratic,
    # so one parabolic step through the final neighbourhood recovers the vertex
    h = config.opt_tol
    pol = _parabolic_polish(f, (c_best - h, c_best, c_best + h),
                            (f(c_best - h), E_best, f(c_best + h)))
    if pol is not None and pol[1] < E_best:
        c_best, E_best = pol
    return c_best, residual_at(spec, config, c_best)


def with_c0(config: SolverConfig, c0: float | str) -> SolverConfig:
    return replace(config, c0=c0)


__all__ = [
    "OPTIMIZE", "OptimizationInfeasible", "ResidualReport", "SolverConfig",
    "discrete_residual", "golden_section", "optimize_c0", "residual_at",
    "residual_operator", "residual_polynomial", "with_c0",
]

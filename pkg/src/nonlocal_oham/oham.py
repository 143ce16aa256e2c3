"""Deformation recursion producing the homotopy series ``y_0, y_1, ...``.

For ``k >= 1``::

    y_k = chi_k y_{k-1} + c0 [ y_{k-1} - (1 - chi_k)(a + (b - a) x)
                               - K[H_{k-1}] / alpha(p_{k-1}) ]

with ``K`` the Green operator and ``H_j`` the q**j coefficient of the
right-hand side evaluated on the embedded series.  ``c0 = -1`` gives the
Adomian decomposition ``y_k = K[H_{k-1}] / alpha(p_{k-1})``.
"""

from __future__ import annotations

from dataclasses import dataclass, field, replace
from typing import Sequence

from .config import PStrategy, SolverConfig
from .kernel import apply_green
from .poly import ONE, ZERO, Polynomial, evaluate, integrate01, mul, poly_sum
from .problem import NonpositiveNonlocalCoefficient, ProblemSpec, alpha

BOUNDARY_TOL = 1e-10


@dataclass(frozen=True)
class SeriesStage:
    k: int
    y: Polynomial
    H_prev: Polynomial | None = None
    p_prev: float | None = None
    alpha_prev: float | None = None


@dataclass(frozen=True)
class HomotopySeries:
    problem: ProblemSpec
    c0: float
    strategy: PStrategy = PStrategy.FROZEN
    stages: tuple[SeriesStage, ...] = field(default_factory=tuple)

    def __post_init__(self):
        if self.c0 == 0:
            raise ValueError("convergence-control parameter c0 must be nonzero")

    @property
    def order(self) -> int:
        return len(self.stages) - 1

    @property
    def terms(self) -> list[Polynomial]:
        return [s.y for s in self.stages]

    def partial_sum(self, upto: int | None = None) -> Polynomial:
        return partial_sum(self, self.order if upto is None else upto)


def chi(k: int) -> float:
    if k < 1:
        raise ValueError(f"chi is defined for k >= 1, got {k}")
    return 0.0 if k == 1 else 1.0


def initial_guess(spec: ProblemSpec, override: Polynomial | None = None) -> Polynomial:
    """``a + (b - a) x`` unless an override with the same boundary values is given."""
    if override is None:
        return spec.boundary_line
    if abs(evaluate(override, 0.0) - spec.a) > BOUNDARY_TOL or \
            abs(evaluate(override, 1.0) - spec.b) > BOUNDARY_TOL:
        raise ValueError("initial guess must satisfy y0(0) = a and y0(1) = b")
    return override


def series_power_coefficient(terms: Sequence[Polynomial], m: int, k: int) -> Polynomial:
    """Coefficient of ``q**k`` in ``(sum_j terms[j] q**j) ** m``.

    Computed by ``m`` truncated convolutions in q; missing terms count as zero.
    """
    if m < 0 or k < 0:
        raise ValueError("m and k must be nonnegative")
    series = [terms[j] if j < len(terms) else ZERO for j in range(k + 1)]
    acc = [ONE] + [ZERO] * k
    for _ in range(m):
        acc = [poly_sum([mul(acc[i], series[n - i]) for i in range(n + 1)])
               for n in range(k + 1)]
    return acc[k]


def homotopy_coefficient(spec: ProblemSpec, terms: Sequence[Polynomial], k: int,
                         strict: bool = False) -> Polynomial:
    """``H_k = h + lam * [q**k](sum y_j q**j)**m``.

    The forcing ``h`` enters every stage; with ``strict=True`` it enters only
    ``k = 0`` (the plain Taylor coefficient).
    """
    H = spec.forcing if (k == 0 or not strict) else ZERO
    if spec.lam != 0:
        H = H + spec.lam * series_power_coefficient(terms, spec.power, k)
    return H


def compute_p(strategy: PStrategy, terms: Sequence[Polynomial], k: int) -> float:
    if not terms:
        raise ValueError("terms must be nonempty")
    if strategy is PStrategy.PARTIAL_SUM:
        return integrate01(poly_sum(terms[: k + 1]))
    # EXPANSION uses int y_0 as its base point; the q-expansion lives in deformation_step.
    return integrate01(terms[0])


def _inverse_alpha_coefficients(spec: ProblemSpec, p_terms: Sequence[float], n: int,
                                stage: int) -> list[float]:
    """Taylor coefficients in q of ``(p_0 + p_1 q + ...) ** (-gamma)`` up to q**n."""
    e = -spec.gamma
    p0 = p_terms[0]
    beta = [1.0 / alpha(spec, p0, stage)]
    for j in range(1, n + 1):
        s = sum(((e + 1.0) * i - j) * p_terms[i] * beta[j - i] for i in range(1, j + 1))
        beta.append(s / (j * p0))
    return beta


def deformation_step(series: HomotopySeries, k: int) -> SeriesStage:
    """Compute stage ``k`` from the stages already stored in ``series``."""
    if k < 1 or len(series.stages) < k:
        raise ValueError(f"stage {k} needs stages 0..{k - 1}")
    spec, c0 = series.problem, series.c0
    terms = [s.y for s in series.stages[:k]]
    prev = terms[k - 1]
    ck = chi(k)

    if series.strategy is PStrategy.EXPANSION:
        p_terms = [integrate01(t) for t in terms]
        beta = _inverse_alpha_coefficients(spec, p_terms, k - 1, stage=k)
        H_hat = [homotopy_coefficient(spec, terms, l, strict=True) for l in range(k)]
        nonlocal_term = poly_sum([beta[k - 1 - l] * apply_green(H_hat[l]) for l in range(k)])
        H_prev, p_prev, alpha_prev = H_hat[k - 1], p_terms[0], 1.0 / beta[0]
    else:
        p_prev = compute_p(series.strategy, terms, k - 1)
        alpha_prev = alpha(spec, p_prev, stage=k)
        H_prev = homotopy_coefficient(spec, terms, k - 1)
        nonlocal_term = apply_green(H_prev) / alpha_prev

    bracket = prev - nonlocal_term
    if ck == 0.0:
        bracket = bracket - spec.boundary_line
    y = ck * prev + c0 * bracket
    return SeriesStage(k, y, H_prev, p_prev, alpha_prev)


def build_series(spec: ProblemSpec, config: SolverConfig, c0: float) -> HomotopySeries:
    """Run the recursion up to ``config.order`` at the given ``c0``."""
    y0 = initial_guess(spec, config.initial_guess)
    series = HomotopySeries(spec, float(c0), config.p_strategy, (SeriesStage(0, y0),))
    for k in range(1, config.order + 1):
        try:
            stage = deformation_step(series, k)
        except NonpositiveNonlocalCoefficient as exc:
            if exc.stage is None:
                exc.stage = k
            raise
        series = replace(series, stages=series.stages + (stage,))
    return series


def partial_sum(series: HomotopySeries, upto: int) -> Polynomial:
    if not 0 <= upto <= series.order:
        raise IndexError(f"partial sum index {upto} outside 0..{series.order}")
    return poly_sum([s.y for s in series.stages[: upto + 1]])

import math

import numpy as np
import pytest

from nonlocal_oham.config import PStrategy, SolverConfig
from nonlocal_oham.kernel import apply_green
from nonlocal_oham.oham import (
    HomotopySeries, SeriesStage, build_series, chi, compute_p, deformation_step,
    homotopy_coefficient, initial_guess, partial_sum, series_power_coefficient,
)
from nonlocal_oham.poly import Polynomial, evaluate, max_abs_on_grid
from nonlocal_oham.problem import NonpositiveNonlocalCoefficient, ProblemSpec, alpha, builtin

from .oracles import multinomial_power_coefficient

P = Polynomial
W = P([0, -1, 0, 1])          # x^3 - x
KAPPA = 2 ** (-1 / 3)          # 1/alpha(1/2) * K[h]  =  KAPPA * W  for example 1
C0_EX1 = (-3 + math.sqrt(9 - 4 * 2 ** (1 / 3))) / 2   # root of c^2 + 3c + 2^(1/3)


def test_c0_oracle_value():
    assert C0_EX1 == pytest.approx(-0.504973, abs=1e-6)
    assert C0_EX1 ** 2 + 3 * C0_EX1 + 2 ** (1 / 3) == pytest.approx(0, abs=1e-15)


def test_chi():
    assert chi(1) == 0 and chi(2) == 1 and chi(10) == 1
    with pytest.raises(ValueError):
        chi(0)


def test_initial_guess():
    assert initial_guess(builtin(1)) == P([0, 1])
    g2 = initial_guess(builtin(2))
    assert g2.coeff(0) == 1.0 and g2.coeff(1) == pytest.approx(-0.292893, abs=1e-6)
    assert initial_guess(builtin(4)) == P([1, -0.5])


def test_initial_guess_override():
    spec = builtin(1)
    good = P([0, 0, 1])
    assert initial_guess(spec, good) is good
    with pytest.raises(ValueError):
        initial_guess(spec, P([0.1, 1.0]))


def test_series_power_examples():
    y0, y1, y2 = P([1, -0.3]), P([0, 0.2, -0.2]), P([0, 0.05, 0, -0.05])
    assert series_power_coefficient([y0], 5, 0).allclose(y0 ** 5)
    assert series_power_coefficient([y0, y1], 3, 1).allclose(3 * y0 ** 2 * y1)
    expected = P(multinomial_power_coefficient([y0, y1, y2], 5, 2))
    assert series_power_coefficient([y0, y1, y2], 5, 2).allclose(expected)
    assert series_power_coefficient([y0, y1, y2], 5, 2).allclose(
        5 * y0 ** 4 * y2 + 10 * y0 ** 3 * y1 ** 2)


def test_series_power_trivial_cases():
    y0 = P([1, 2])
    assert series_power_coefficient([y0], 0, 0) == P([1.0])
    assert series_power_coefficient([y0], 0, 2).is_zero()
    assert series_power_coefficient([y0], 3, 2).is_zero()   # missing terms count as zero


def test_series_power_matches_enumeration_random():
    rng = np.random.default_rng(5)
    for _ in range(20):
        m = int(rng.choice([3, 5]))
        k = int(rng.integers(0, 5))
        terms = [P(rng.uniform(-1, 1, rng.integers(1, 5))) for _ in range(k + 1)]
        got = series_power_coefficient(terms, m, k)
        assert got.allclose(P(multinomial_power_coefficient(terms, m, k)), 1e-12)


def test_homotopy_coefficient():
    e1 = builtin(1)
    assert homotopy_coefficient(e1, [P([0, 1])] * 4, 3) == e1.forcing
    assert homotopy_coefficient(e1, [P([0, 1])] * 4, 3, strict=True).is_zero()
    e2 = builtin(2)
    y0 = initial_guess(e2)
    H0 = homotopy_coefficient(e2, [y0], 0)
    assert H0.allclose(e2.lam * y0 ** 5, 1e-14)
    assert H0.coeff(0) == pytest.approx(0.905330, abs=1e-6)


def test_homotopy_coefficient_without_forcing_or_nonlinearity():
    # bypass validation: this configuration is disallowed as a problem
    spec = object.__new__(ProblemSpec)
    for name, v in dict(a=0.0, b=1.0, gamma=1.0, forcing=P(), lam=0.0, power=1).items():
        object.__setattr__(spec, name, v)
    assert homotopy_coefficient(spec, [P([0, 1])], 0).is_zero()


def test_compute_p():
    terms = [P([0, 1]), 0.401293 * W]
    assert compute_p(PStrategy.FROZEN, terms, 1) == 0.5
    assert compute_p(PStrategy.PARTIAL_SUM, terms, 1) == pytest.approx(0.399677, abs=1e-5)
    for s in PStrategy:
        assert compute_p(s, terms, 0) == 0.5
    with pytest.raises(ValueError):
        compute_p(PStrategy.FROZEN, [], 0)


def test_first_stage_example1():
    spec = builtin(1)
    s = build_series(spec, SolverConfig(order=1), -1.0)
    assert s.stages[1].y.allclose(KAPPA * W, 1e-13)
    assert s.stages[1].y.coeff(3) == pytest.approx(0.793701, abs=1e-6)
    for c0 in (-0.3, -1.7, 0.4):
        y1 = build_series(spec, SolverConfig(order=1), c0).stages[1].y
        assert evaluate(y1, 0.0) == 0.0 and abs(evaluate(y1, 1.0)) < 1e-15


def test_first_stage_matches_gauss_quadrature():
    from .oracles import green_quadrature
    spec = builtin(1)
    y1 = build_series(spec, SolverConfig(order=1), -1.0).stages[1].y
    for x in np.linspace(0, 1, 11):
        assert evaluate(y1, x) == pytest.approx(green_quadrature(spec.forcing, x) / 0.5 ** (1 / 3),
                                                abs=1e-13)


def test_example1_exact_at_analytic_c0():
    phi = build_series(builtin(1), SolverConfig(order=2), C0_EX1).partial_sum()
    assert phi.coeff(3) == pytest.approx(1.0, abs=1e-9)
    assert phi.coeff(1) == pytest.approx(0.0, abs=1e-9)
    assert max_abs_on_grid(phi - P([0, 0, 0, 1]), 201) <= 1e-9


def test_example1_adm_frozen_stages_repeat():
    s = build_series(builtin(1), SolverConfig(order=2), -1.0)
    assert s.stages[1].y.allclose(KAPPA * W, 1e-12)
    assert s.stages[2].y.allclose(s.stages[1].y, 1e-15)


def test_stage_count_and_metadata():
    for n in (1, 2, 4):
        s = build_series(builtin(2), SolverConfig(order=n), -0.8)
        assert len(s.stages) == n + 1 and s.order == n
        assert all(st.alpha_prev > 0 for st in s.stages[1:])
        assert s.stages[0].y == initial_guess(builtin(2))


def test_zero_c0_rejected():
    with pytest.raises(ValueError):
        HomotopySeries(builtin(1), 0.0)


def test_deformation_step_requires_previous_stages():
    s = HomotopySeries(builtin(1), -1.0, PStrategy.FROZEN, (SeriesStage(0, P([0, 1])),))
    with pytest.raises(ValueError):
        deformation_step(s, 2)


@pytest.mark.parametrize("strategy", list(PStrategy))
@pytest.mark.parametrize("example", [1, 2, 3, 4])
def test_boundary_invariant(example, strategy):
    spec = builtin(example)
    s = build_series(spec, SolverConfig(order=3, p_strategy=strategy), -0.7)
    for st in s.stages[1:]:
        assert abs(evaluate(st.y, 0.0)) <= 1e-12 and abs(evaluate(st.y, 1.0)) <= 1e-12
    phi = s.partial_sum()
    assert abs(evaluate(phi, 0.0) - spec.a) <= 1e-10
    assert abs(evaluate(phi, 1.0) - spec.b) <= 1e-10


@pytest.mark.parametrize("strategy", [PStrategy.FROZEN, PStrategy.PARTIAL_SUM])
@pytest.mark.parametrize("example", [1, 2, 3, 4])
def test_adm_reduction(example, strategy):
    """At c0 = -1 every stage is the Green operator applied to the previous H."""
    s = build_series(builtin(example), SolverConfig(order=3, p_strategy=strategy), -1.0)
    for st in s.stages[1:]:
        assert st.y.allclose(apply_green(st.H_prev) / st.alpha_prev, 1e-12)


def test_determinism():
    cfg = SolverConfig(order=3, p_strategy=PStrategy.PARTIAL_SUM)
    a = build_series(builtin(3), cfg, -0.83)
    b = build_series(builtin(3), cfg, -0.83)
    for sa, sb in zip(a.stages, b.stages):
        assert np.array_equal(sa.y.coeffs, sb.y.coeffs)


def test_first_stage_independent_of_strategy():
    for ex in (1, 2, 3, 4):
        ys = [build_series(builtin(ex), SolverConfig(order=1, p_strategy=s), -0.6).stages[1].y
              for s in PStrategy]
        assert ys[0].allclose(ys[1], 1e-15) and ys[0].allclose(ys[2], 1e-15)


def test_partial_sum_bounds():
    s = build_series(builtin(2), SolverConfig(order=2), -0.8)
    assert partial_sum(s, 0) == s.stages[0].y
    with pytest.raises(IndexError):
        partial_sum(s, 3)


def test_nonpositive_p_reports_stage():
    # partial sums of example 1 at c0 = -1 drive int(phi) negative at stage 4
    cfg = SolverConfig(order=4, p_strategy=PStrategy.PARTIAL_SUM)
    with pytest.raises(NonpositiveNonlocalCoefficient) as info:
        build_series(builtin(1), cfg, -1.0)
    assert info.value.stage == 4
    assert info.value.p < 0


def test_example2_leading_coefficients_soft():
    # published order-2 values at c0 = -0.819014: 1, -0.4973, 0.3737
    phi = build_series(builtin(2), SolverConfig(order=2), -0.819014).partial_sum()
    assert phi.coeff(0) == 1.0
    assert phi.coeff(1) == pytest.approx(-0.4973, abs=0.01)
    assert phi.coeff(2) == pytest.approx(0.3737, abs=1e-4)


def test_expansion_inverse_alpha_coefficients():
    """beta_j against the generalized-binomial expansion, computed by hand for order 3."""
    spec = builtin(4)
    cfg = SolverConfig(order=3, p_strategy=PStrategy.EXPANSION)
    s = build_series(spec, cfg, -0.6)
    from nonlocal_oham.oham import _inverse_alpha_coefficients
    from nonlocal_oham.poly import integrate01
    p = [integrate01(st.y) for st in s.stages]
    beta = _inverse_alpha_coefficients(spec, p, 3, stage=0)
    e = 2.0   # -gamma
    u1, u2, u3 = p[1] / p[0], p[2] / p[0], p[3] / p[0]
    ref = [1, e * u1, e * u2 + e * (e - 1) / 2 * u1 ** 2,
           e * u3 + e * (e - 1) * u1 * u2 + e * (e - 1) * (e - 2) / 6 * u1 ** 3]
    assert np.allclose(beta, np.array(ref) * p[0] ** e, rtol=1e-13, atol=0)

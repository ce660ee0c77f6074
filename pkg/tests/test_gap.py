import math

import numpy as np
import pytest

from bose_eos import (
    GasParamsSI,
    gap_residual,
    kappa_of,
    m_dimensionful,
    reduce,
    solve,
    solve_exact,
    solve_perturbative,
    state_point,
)
from bose_eos.units import HBAR, coupling_g

LI7_MASS = 1.165e-26
A_S = 1.59e-7


def _bisect_root(f, lo, hi, tol=1e-15):
    """Independent bisection oracle; assumes f(lo) < 0 < f(hi)."""
    for _ in range(200):
        mid = 0.5 * (lo + hi)
        if hi - lo < tol:
            return mid
        if f(mid) < 0.0:
            lo = mid
        else:
            hi = mid
    return 0.5 * (lo + hi)


def test_kappa_vanishes_in_ideal_gas_limit():
    values = [kappa_of(state_point(g, 0.0)) for g in (1e-6, 1e-9, 1e-12)]
    assert all(a > b > 0.0 for a, b in zip(values, values[1:]))
    assert values[-1] < 1e-5


def test_kappa_benchmark_values():
    # Direct arithmetic at gamma = 4e-3.
    expected_r0 = 32.0 * math.sqrt(4e-3) / (3.0 * math.sqrt(math.pi))
    got_r0 = kappa_of(state_point(4e-3, 0.0))
    assert got_r0 == pytest.approx(expected_r0, rel=1e-15)
    assert got_r0 == pytest.approx(0.38061314477925784, rel=1e-12)
    t = 8.0 * math.pi * 4e-3
    got_r1 = kappa_of(state_point(4e-3, 1.0))
    assert got_r1 == pytest.approx(expected_r0 / (1.0 + t) ** 2, rel=1e-14)
    assert got_r1 == pytest.approx(0.31425286796684176, rel=1e-12)


def test_exact_root_at_kappa_zero():
    assert solve_exact(0.0) == 1.0


def test_exact_root_at_kappa_one_vs_bisection_oracle():
    oracle = _bisect_root(lambda u: u * u + u ** 3 - 1.0, 0.0, 1.0)
    got = solve_exact(1.0)
    assert abs(got - oracle) < 1e-13
    assert got == pytest.approx(0.7548776662466927, abs=1e-12)


def test_exact_root_leading_expansion():
    kappa = 1e-6
    assert abs(solve_exact(kappa) - (1.0 - 0.5 * kappa)) < 5e-12


def test_exact_root_monotone_decreasing_and_bounded():
    kappas = np.logspace(-6, 2, 40)
    roots = [solve_exact(float(k)) for k in kappas]
    assert all(0.0 < u <= 1.0 for u in roots)
    assert all(a > b for a, b in zip(roots, roots[1:]))


def test_residual_budget_on_grid():
    for kappa in np.logspace(-8, 2, 30):
        u = solve_exact(float(kappa))
        assert gap_residual(u, float(kappa)) <= 1e-14


def test_negative_kappa_rejected():
    with pytest.raises(ValueError):
        solve_exact(-0.1)


def test_perturbative_examples():
    assert solve_perturbative(0.0) == 1.0
    assert solve_perturbative(0.1) == pytest.approx(0.95625, rel=1e-15)
    assert solve_perturbative(0.1, drop_m2=True) == pytest.approx(0.95, rel=1e-15)


def test_gap_solution_fields():
    point = state_point(4e-3, 0.5)
    sol = solve(point)
    assert sol.kappa == kappa_of(point)
    # Floating-point identity with the implementation's evaluation order.
    assert sol.u_pert == 1.0 - 0.5 * sol.kappa + 0.625 * sol.kappa * sol.kappa
    assert sol.residual <= 1e-14
    assert 1 <= sol.iterations <= 100
    assert 0.0 < sol.u_exact <= 1.0


def test_printed_form_equivalence_of_perturbative_root():
    # The quadratic-truncation root written out in full, with the
    # (1 + 8 pi gamma r)^-2 screening kept explicit, must agree with
    # 1 - kappa/2 + (5/8) kappa^2 at random states.
    rng = np.random.default_rng(7)
    for _ in range(100):
        gamma = 10.0 ** rng.uniform(-8, math.log10(4e-3))
        r = rng.uniform(-1.0, 1.0)
        screen = (1.0 + 8.0 * math.pi * gamma * r) ** 2
        lead = 16.0 * math.sqrt(gamma) / (3.0 * math.sqrt(math.pi) * screen)
        sub = 40.0 * math.sqrt(gamma) / (3.0 * math.sqrt(math.pi) * screen)
        printed = 1.0 - lead * (1.0 - sub)
        got = solve_perturbative(kappa_of(state_point(gamma, r)))
        assert got == pytest.approx(printed, rel=1e-14)


def test_order_of_accuracy_slope_and_constant():
    kappas = np.logspace(-4, -2, 20)
    diffs = np.array([abs(solve_exact(float(k)) - solve_perturbative(float(k))) for k in kappas])
    slope = np.polyfit(np.log(kappas), np.log(diffs), 1)[0]
    assert slope >= 2.9
    # Next-order coefficient is -1, so |diff| ~ kappa^3.
    assert np.all(diffs <= 1.2 * kappas ** 3)
    assert np.all(diffs >= 0.8 * kappas ** 3)


def test_perturbative_residual_is_cubic():
    for kappa in (1e-4, 1e-3, 1e-2):
        res = gap_residual(solve_perturbative(kappa), kappa)
        assert res <= 3.0 * kappa ** 3
        assert res >= 1.5 * kappa ** 3


def test_m_dimensionful_scalings():
    params = GasParamsSI(LI7_MASS, A_S, 0.0, 4e-3 / A_S ** 3)
    g = coupling_g(params)
    rho = params.density_per_m3
    assert m_dimensionful(1.0, params) == pytest.approx(math.sqrt(2.0 * g * rho), rel=1e-15)
    quadrupled = GasParamsSI(LI7_MASS, A_S, 0.0, 4.0 * rho)
    assert m_dimensionful(0.9, quadrupled) == pytest.approx(2.0 * m_dimensionful(0.9, params), rel=1e-12)
    with pytest.raises(ValueError):
        m_dimensionful(0.0, params)


def test_exact_root_matches_si_newton_solve():
    # Newton iteration on the dimensionful condition M^2 = 2 g rho - c M^3.
    params = GasParamsSI(LI7_MASS, A_S, A_S, 4e-3 / A_S ** 3)
    point = reduce(params)
    g = coupling_g(params)
    rho = params.density_per_m3
    m_star = params.mass_kg * point.s
    c = (2.0 * m_star) ** 1.5 * g * math.sqrt(point.s) / (3.0 * math.pi ** 2 * HBAR ** 3)
    m = math.sqrt(2.0 * g * rho)
    for _ in range(60):
        f = m * m - 2.0 * g * rho + c * m ** 3
        m -= f / (2.0 * m + 3.0 * c * m * m)
    assert m_dimensionful(solve_exact(kappa_of(point)), params) == pytest.approx(m, rel=1e-12)

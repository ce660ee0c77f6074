import math

import pytest

from bose_eos import (
    closed_form_P11,
    closed_form_P22,
    depletion_fraction,
    gap_closure_residual,
    kappa_of,
    li7_params,
    m_dimensionful,
    p11_T0_dimensionless,
    p22_T0_dimensionless,
    reduce,
    solve_exact,
    state_point,
    thermal_parts,
)
from bose_eos.quadrature import _integrand_p11, _integrand_p22
from bose_eos.units import coupling_g


def test_subtracted_integrals_hit_closed_values():
    assert p11_T0_dimensionless() == pytest.approx(2.0 / 3.0, rel=1e-8)
    assert p22_T0_dimensionless() == pytest.approx(-1.0 / 3.0, rel=1e-8)


def test_integrands_finite_at_origin():
    assert _integrand_p11(0.0) == 0.5
    assert _integrand_p22(0.0) == -0.5


def test_integrand_tails_decay_as_inverse_square():
    # leading tails 3/(8 x^2) and -1/(8 x^2)
    x = 100.0
    assert _integrand_p11(x) * (8.0 * x * x / 3.0) == pytest.approx(1.0, abs=1e-3)
    assert _integrand_p22(x) * (-8.0 * x * x) == pytest.approx(1.0, abs=1e-3)


def test_split_point_independence():
    assert abs(p11_T0_dimensionless(50.0) - p11_T0_dimensionless(100.0)) < 1e-9
    assert abs(p22_T0_dimensionless(50.0) - p22_T0_dimensionless(100.0)) < 1e-9


def test_closed_forms_ratio_at_contact_limit():
    params = li7_params(4e-3, 0.0)
    point = reduce(params)
    m_gap = m_dimensionful(solve_exact(kappa_of(point)), params)
    p11 = closed_form_P11(point, m_gap, params)
    p22 = closed_form_P22(point, m_gap, params)
    assert p11 == pytest.approx(-2.0 * p22, rel=1e-15)


def test_dimensionless_reconstruction_of_closed_form():
    # P11 = (2 m* M^2)^(3/2) sqrt(s) / (4 pi^2 hbar^3) * I11 with I11 = 2/3.
    from bose_eos.units import HBAR

    params = li7_params(2e-3, 0.7)
    point = reduce(params)
    m_gap = m_dimensionful(solve_exact(kappa_of(point)), params)
    m_star = params.mass_kg * point.s
    prefactor = (2.0 * m_star * m_gap ** 2) ** 1.5 * math.sqrt(point.s) / (
        4.0 * math.pi ** 2 * HBAR ** 3
    )
    assert prefactor * p11_T0_dimensionless() == pytest.approx(
        closed_form_P11(point, m_gap, params), rel=1e-8
    )


def test_depletion_consistency_with_closed_forms():
    # (P11 + P22) / (2 rho) must reproduce the depletion fraction.
    params = li7_params(4e-3, 1.0)
    point = reduce(params)
    u = solve_exact(kappa_of(point))
    m_gap = m_dimensionful(u, params)
    combined = (
        closed_form_P11(point, m_gap, params) + closed_form_P22(point, m_gap, params)
    ) / (2.0 * params.density_per_m3)
    assert combined == pytest.approx(depletion_fraction(point, u), rel=1e-12)


def test_gap_closure_residual_vanishes_at_exact_root():
    params = li7_params(4e-3, -0.5)
    point = reduce(params)
    u = solve_exact(kappa_of(point))
    scale = 2.0 * coupling_g(params) * params.density_per_m3
    assert abs(gap_closure_residual(params, u)) <= 1e-12 * scale
    # negative control: the mean-field root does not close the equation
    assert abs(gap_closure_residual(params, 1.0)) > 1e-3 * scale


def test_thermal_parts_vanish_identically_at_zero_temperature():
    point = state_point(1e-4, 0.5)
    assert thermal_parts(point, 0.0) == (0.0, 0.0)
    with pytest.raises(ValueError):
        thermal_parts(point, -0.1)


def test_thermal_parts_monotone_in_temperature():
    point = state_point(1e-4, 0.5)
    taus = [0.01 * k for k in range(1, 11)]
    i11 = [thermal_parts(point, tau)[0] for tau in taus]
    i22 = [thermal_parts(point, tau)[1] for tau in taus]
    assert all(v > 0.0 for v in i11)
    assert all(v > 0.0 for v in i22)
    assert all(a < b for a, b in zip(i11, i11[1:]))


def test_thermal_parts_against_mpmath_oracle():
    mp = pytest.importorskip("mpmath")
    point = state_point(1e-4, 0.5)
    sqrt_s = mp.sqrt(point.s)
    for tau in (0.05, 0.1):
        i11, i22 = thermal_parts(point, tau)

        def occ(x):
            return 2 / mp.expm1(sqrt_s * x * mp.sqrt(x * x + 1) / tau)

        oracle11 = mp.quad(lambda x: x ** 3 / mp.sqrt(x * x + 1) * occ(x), [0, 1, mp.inf])
        oracle22 = mp.quad(lambda x: x * mp.sqrt(x * x + 1) * occ(x), [0, 1, mp.inf])
        assert i11 == pytest.approx(float(oracle11), rel=1e-9)
        assert i22 == pytest.approx(float(oracle22), rel=1e-9)


def test_thermal_suppression_at_small_temperature():
    # Gapless phonons give power-law growth: dI11 ~ tau^4, dI22 ~ tau^2, so
    # halving tau cuts dI11 by roughly 2^4 (the measured ratio is ~0.081
    # rather than 1/16 because of subleading corrections).
    point = state_point(1e-4, 0.5)
    ratio11 = thermal_parts(point, 0.05)[0] / thermal_parts(point, 0.1)[0]
    ratio22 = thermal_parts(point, 0.05)[1] / thermal_parts(point, 0.1)[1]
    assert ratio11 == pytest.approx(0.08062982242066011, rel=1e-6)
    assert ratio11 < 0.1
    assert 0.2 < ratio22 < 0.3

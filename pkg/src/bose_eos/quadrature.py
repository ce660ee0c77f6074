"""Regularized zero-temperature momentum integrals and their thermal parts.

With the kinetic substitution x**2 = eps*_k / M**2 (starred kinetic energy,
i.e. the one built on the modified mass) both zero-temperature integrands
become independent of (gamma, r); the mass-ratio dependence factors into the
closed-form prefactors.  The bare integrands grow like x**2 + O(1) at large
x, so the integrals carry cubic and linear power divergences in a cutoff.
The regularization used here subtracts exactly those pure power terms and
keeps the finite remainder:

    I11 = int_0^inf [ x**3/sqrt(x**2+1) - x**2 + 1/2 ] dx =  2/3
    I22 = int_0^inf [ x*sqrt(x**2+1)    - x**2 - 1/2 ] dx = -1/3

The antiderivatives (x**2-2)*sqrt(x**2+1)/3 and ((x**2+1)**(3/2)-1)/3 give
the same finite parts, which is what the quadrature below verifies without
assuming it.  Thermal occupation parts converge without any subtraction and
vanish identically at zero temperature.
"""

from __future__ import annotations

import math
import warnings

from scipy.integrate import IntegrationWarning, quad

from .errors import QuadratureFailure
from .units import HBAR, GasParamsSI, StatePoint, coupling_g, reduce

# Quadrature split: adaptive panel on [0, X_SPLIT], asymptotic tail beyond.
X_SPLIT = 50.0
_PANEL_TOL = 1e-12
_ERROR_BUDGET = 1e-10


def _integrand_p11(x: float) -> float:
    return x ** 3 / math.sqrt(x * x + 1.0) - x * x + 0.5


def _integrand_p22(x: float) -> float:
    return x * math.sqrt(x * x + 1.0) - x * x - 0.5


def _tail_p11(x_split: float) -> float:
    # Integral of the expanded integrand 3/(8 x**2) - 5/(16 x**4) from x_split.
    return 3.0 / (8.0 * x_split) - 5.0 / (48.0 * x_split ** 3)


def _tail_p22(x_split: float) -> float:
    # Integral of -1/(8 x**2) + 1/(16 x**4) from x_split.
    return -1.0 / (8.0 * x_split) + 1.0 / (48.0 * x_split ** 3)


def _panel(fn, lo: float, hi: float) -> float:
    # The returned error estimate is checked against the budget below, so the
    # roundoff advisory emitted near machine precision carries no information.
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        value, estimate = quad(fn, lo, hi, epsabs=_PANEL_TOL, epsrel=_PANEL_TOL, limit=200)
    if estimate > _ERROR_BUDGET:
        raise QuadratureFailure(
            f"quadrature error estimate {estimate:.3e} exceeds {_ERROR_BUDGET:.0e}"
        )
    return value


def p11_T0_dimensionless(x_split: float = X_SPLIT) -> float:
    """Subtracted normal-propagator integral; equals 2/3."""
    return _panel(_integrand_p11, 0.0, x_split) + _tail_p11(x_split)


def p22_T0_dimensionless(x_split: float = X_SPLIT) -> float:
    """Subtracted anomalous-propagator integral; equals -1/3."""
    return _panel(_integrand_p22, 0.0, x_split) + _tail_p22(x_split)


def closed_form_P11(point: StatePoint, m_gap: float, params: GasParamsSI) -> float:
    """P11 = (2 m*)**(3/2) M**3 sqrt(m*/m) / (6 pi**2 hbar**3), in 1/m**3."""
    m_star = params.mass_kg * point.s
    return (
        (2.0 * m_star) ** 1.5 * m_gap ** 3 * math.sqrt(point.s)
        / (6.0 * math.pi ** 2 * HBAR ** 3)
    )


def closed_form_P22(point: StatePoint, m_gap: float, params: GasParamsSI) -> float:
    """P22 = -(2 m*)**(3/2) M**3 sqrt(m/m*) / (12 pi**2 hbar**3), in 1/m**3."""
    m_star = params.mass_kg * point.s
    return (
        -((2.0 * m_star) ** 1.5) * m_gap ** 3
        / (12.0 * math.pi ** 2 * HBAR ** 3 * math.sqrt(point.s))
    )


def gap_closure_residual(params: GasParamsSI, u: float) -> float:
    """Residual of the self-consistency condition assembled through P11.

    Substituting the closed-form P11 into M**2 = 2 g rho - 2 g P11 must
    vanish at the exact reduced root; the residual is returned in SI units
    (J, i.e. the units of M**2)."""
    point = reduce(params)
    g = coupling_g(params)
    m_gap = math.sqrt(2.0 * g * params.density_per_m3) * u
    return (
        m_gap ** 2
        - 2.0 * g * params.density_per_m3
        + 2.0 * g * closed_form_P11(point, m_gap, params)
    )


def thermal_parts(point: StatePoint, tau: float) -> tuple[float, float]:
    """Bose-occupation parts of the two integrals at temperature tau = k_B T / M**2.

    Returns (dI11, dI22), both nonnegative, in the same dimensionless
    normalization as the subtracted zero-temperature integrals.  At tau = 0
    the occupation factor vanishes and (0.0, 0.0) is returned exactly."""
    if tau < 0.0:
        raise ValueError(f"tau must be nonnegative, got {tau}")
    if tau == 0.0:
        return (0.0, 0.0)
    sqrt_s = math.sqrt(point.s)

    def occupation(x: float) -> float:
        arg = sqrt_s * x * math.sqrt(x * x + 1.0) / tau
        if arg > 700.0:
            return 0.0
        return 2.0 / math.expm1(arg)

    def f11(x: float) -> float:
        if x == 0.0:
            return 0.0
        return x ** 3 / math.sqrt(x * x + 1.0) * occupation(x)

    def f22(x: float) -> float:
        if x == 0.0:
            return 2.0 * tau / sqrt_s  # limit of x*sqrt(x^2+1)*occupation
        return x * math.sqrt(x * x + 1.0) * occupation(x)

    results = []
    with warnings.catch_warnings():
        warnings.simplefilter("ignore", IntegrationWarning)
        for fn in (f11, f22):
            value, estimate = quad(fn, 0.0, math.inf, epsabs=1e-14, epsrel=1e-10, limit=200)
            if estimate > _ERROR_BUDGET:
                raise QuadratureFailure(
                    f"thermal quadrature error estimate {estimate:.3e} exceeds {_ERROR_BUDGET:.0e}"
                )
            results.append(value)
    return (results[0], results[1])

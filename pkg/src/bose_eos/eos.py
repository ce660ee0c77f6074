"""Zero-temperature thermodynamic ratios as closed functions of (state, u).

All quantities are dimensionless ratios against their mean-field scales:
depletion against rho, mu against g*rho, pressure and energy against
g*rho**2/2, sound speed against sqrt(g*rho/m).  Dimensionful values are
recovered by multiplying with :func:`bose_eos.units.energy_scales`.

The reduced root u fed into each formula is chosen by mode: ``exact`` solves
the cubic self-consistency condition, ``perturbative`` uses its second-order
truncation, and ``series`` evaluates the exact-coefficient truncated
expansions instead of the closed formulas.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import NonPositiveCompressibility
from .gap import kappa_of, solve_exact, solve_perturbative
from .units import (
    GasParamsSI,
    StatePoint,
    coupling_g,
    reduce,
    state_point,
    validity_flags,
)
from . import series as hs

_SQRT_PI = math.sqrt(math.pi)

MODES = ("exact", "perturbative", "series")

# Universal energy coefficients of gamma and gamma**(3/2); the pair that
# cancels against itself near gamma ~ 4e-3 and drives the cancellation flag.
ENERGY_GAMMA_COEFF = -1024.0 / (3.0 * math.pi)
ENERGY_GAMMA32_COEFF = 81920.0 / (9.0 * math.pi ** 1.5)


def depletion_fraction(point: StatePoint, u: float) -> float:
    """rho_ex/rho = (8 sqrt(gamma)/(3 sqrt(pi))) s^(3/2) u^3 (2 sqrt(s) - 1/sqrt(s)).

    The bracket changes sign at t = 1; the value is returned as is, and
    reports flag it instead of clamping."""
    s = point.s
    bracket = 2.0 * math.sqrt(s) - 1.0 / math.sqrt(s)
    return (8.0 * math.sqrt(point.gamma) / (3.0 * _SQRT_PI)) * s ** 1.5 * u ** 3 * bracket


def mu_ratio(point: StatePoint, u: float) -> float:
    """mu/(g rho) = 1 + (32 sqrt(gamma)/(3 sqrt(pi))) s^2 u^3."""
    return 1.0 + (32.0 * math.sqrt(point.gamma) / (3.0 * _SQRT_PI)) * point.s * point.s * u ** 3


def pressure_ratio(point: StatePoint, u: float) -> float:
    """P/(g rho^2/2), three correction terms in u^3, u^5 and u^6."""
    gamma, s = point.gamma, point.s
    sqrt_gamma = math.sqrt(gamma)
    u3 = u ** 3
    term3 = (64.0 * sqrt_gamma / (3.0 * _SQRT_PI)) * s * s * u3
    term5 = (128.0 * sqrt_gamma / (15.0 * _SQRT_PI)) * s * s * u3 * u * u
    term6 = (1024.0 * gamma / (9.0 * math.pi)) * s ** 3.5 * u3 * u3
    return 1.0 + term3 - term5 + term6


def energy_ratio(point: StatePoint, u: float) -> float:
    """E/(g rho^2/2) via the Legendre combination 2*mu - P."""
    return 2.0 * mu_ratio(point, u) - pressure_ratio(point, u)


@dataclass(frozen=True)
class DispersionSample:
    """One gapless-spectrum sample: x with x**2 = eps_k/M**2, and E(k)/M**2."""

    x: float
    e_over_m2: float


def dispersion(point: StatePoint, x: float) -> DispersionSample:
    """E(k)/M**2 = x * sqrt(1 + x**2/s) with x**2 = eps_k/M**2.

    The wavenumber convention uses the ordinary (unstarred) kinetic energy,
    so E/M**2 -> x as x -> 0 for every s; the normalized curve depends only
    on the mass ratio s.  At large x it grows like x**2/sqrt(s)."""
    if x < 0.0:
        raise ValueError(f"x must be nonnegative, got {x}")
    return DispersionSample(x=x, e_over_m2=x * math.sqrt(1.0 + x * x / point.s))


# -- sound speed ---------------------------------------------------------------


def _c2_to_ratio(c_squared_ratio: float) -> float:
    if c_squared_ratio <= 0.0:
        raise NonPositiveCompressibility(
            f"d(mu)/d(rho) <= 0 (c^2 ratio = {c_squared_ratio:.6g})"
        )
    return math.sqrt(c_squared_ratio)


def _u_for_mode(kappa: float, mode: str, drop_m2: bool) -> float:
    if mode == "exact":
        return solve_exact(kappa)
    return solve_perturbative(kappa, drop_m2)


def sound_ratio_fd(
    gamma: float,
    r: float,
    mode: str = "exact",
    drop_m2: bool = False,
    h: float = 1e-5,
) -> float:
    """c/sqrt(g rho/m) by central differencing of mu(rho) in dimensionless form.

    c^2/(g rho/m) = S + gamma*dS/dgamma for S = mu/(g rho); the derivative is
    estimated with steps h and h/2 and one Richardson extrapolation.  Each
    sample re-solves the gap condition at its own state."""

    def mu_of(g: float) -> float:
        point = state_point(g, r)
        return mu_ratio(point, _u_for_mode(kappa_of(point), mode, drop_m2))

    def log_slope(step: float) -> float:
        # (S(gamma(1+step)) - S(gamma(1-step)))/(2 step) estimates gamma*S'.
        return (mu_of(gamma * (1.0 + step)) - mu_of(gamma * (1.0 - step))) / (2.0 * step)

    richardson = (4.0 * log_slope(0.5 * h) - log_slope(h)) / 3.0
    return _c2_to_ratio(mu_of(gamma) + richardson)


def sound_ratio_numeric(params: GasParamsSI, h: float = 1e-5) -> float:
    """c/sqrt(g rho/m) = sqrt((rho/m) dmu/drho / (g rho/m)) from SI inputs.

    mu(rho) is evaluated at fixed a_s and r_s with its own exact root and
    modified mass at every density sample; h is the relative density step."""
    if not (1e-7 <= h <= 1e-3):
        raise ValueError(f"relative step h must lie in [1e-7, 1e-3], got {h}")
    rho = params.density_per_m3

    def mu_si(scale: float) -> float:
        scaled = GasParamsSI(params.mass_kg, params.a_s_m, params.r_s_m, rho * scale)
        point = reduce(scaled)
        u = solve_exact(kappa_of(point))
        return coupling_g(scaled) * scaled.density_per_m3 * mu_ratio(point, u)

    def dmu_drho(step: float) -> float:
        return (mu_si(1.0 + step) - mu_si(1.0 - step)) / (2.0 * step * rho)

    derivative = (4.0 * dmu_drho(0.5 * h) - dmu_drho(h)) / 3.0
    c_squared = rho / params.mass_kg * derivative
    c0_squared = coupling_g(params) * rho / params.mass_kg
    return _c2_to_ratio(c_squared / c0_squared)


# -- assembled reports ---------------------------------------------------------


@dataclass(frozen=True)
class EosReport:
    """All thermodynamic ratios at one state point."""

    gamma: float
    r: float
    mode: str
    kappa: float
    u: float
    depletion_fraction: float
    mu_ratio: float
    pressure_ratio: float
    energy_ratio: float
    sound_ratio: float
    flags: tuple[str, ...]


_series_cache: dict[tuple[str, bool], hs.HalfSeries] = {}


def _series_for(which: str, drop_m2: bool) -> hs.HalfSeries:
    key = (which, drop_m2)
    if key not in _series_cache:
        _series_cache[key] = hs.expand_quantity(which, hs.MAX_ORDER, drop_m2)
    return _series_cache[key]


def report_flags(point: StatePoint) -> tuple[str, ...]:
    """Validity warnings attached to a report (non-fatal)."""
    flags = list(validity_flags(point))
    if point.t >= 1.0:
        flags.append("depletion_negative")
    gamma = point.gamma
    term_gamma = ENERGY_GAMMA_COEFF * gamma
    term_gamma32 = ENERGY_GAMMA32_COEFF * gamma ** 1.5
    largest = max(abs(term_gamma), abs(term_gamma32))
    net = abs(term_gamma + term_gamma32)
    if largest > 3.0 * net:
        flags.append("cancellation")
    return tuple(flags)


def build_report(
    gamma: float,
    r: float,
    mode: str = "series",
    drop_m2: bool = False,
    fd_step: float = 1e-5,
) -> EosReport:
    """Evaluate every ratio at (gamma, r) in the requested mode.

    gamma = 0 is accepted and yields the mean-field report (all ratios 1)."""
    if mode not in MODES:
        raise ValueError(f"mode must be one of {MODES}, got {mode!r}")
    if gamma == 0.0:
        return EosReport(gamma, r, mode, 0.0, 1.0, 0.0, 1.0, 1.0, 1.0, 1.0, ())
    point = state_point(gamma, r)
    kappa = kappa_of(point)
    if mode == "series":
        u = solve_perturbative(kappa, drop_m2)
        depletion = _series_for("depletion", drop_m2).evaluate(gamma, r)
        mu = _series_for("mu", drop_m2).evaluate(gamma, r)
        pressure = _series_for("pressure", drop_m2).evaluate(gamma, r)
        sound = _series_for("sound", drop_m2).evaluate(gamma, r)
    else:
        u = _u_for_mode(kappa, mode, drop_m2)
        depletion = depletion_fraction(point, u)
        mu = mu_ratio(point, u)
        pressure = pressure_ratio(point, u)
        sound = sound_ratio_fd(gamma, r, mode=mode, drop_m2=drop_m2, h=fd_step)
    return EosReport(
        gamma=gamma,
        r=r,
        mode=mode,
        kappa=kappa,
        u=u,
        depletion_fraction=depletion,
        mu_ratio=mu,
        pressure_ratio=pressure,
        energy_ratio=2.0 * mu - pressure,
        sound_ratio=sound,
        flags=report_flags(point),
    )

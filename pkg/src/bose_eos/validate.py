"""Runtime validation suite: series reproduction, identities, and oracles.

The SI-route evaluators here transcribe the dimensionful closed forms
directly, independently of the dimensionless pipeline in :mod:`bose_eos.eos`,
so that the round-trip comparisons are a two-route consistency check rather
than a tautology.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .eos import (
    depletion_fraction,
    energy_ratio,
    mu_ratio,
    pressure_ratio,
    sound_ratio_fd,
)
from .gap import kappa_of, solve_exact, solve_perturbative
from .quadrature import (
    gap_closure_residual,
    p11_T0_dimensionless,
    p22_T0_dimensionless,
)
from . import series as hs
from .units import HBAR, GasParamsSI, coupling_g, energy_scales, reduce, state_point

# Lithium-7 benchmark used for the SI round trips.
LI7_MASS_KG = 1.165e-26
LI7_A_S_M = 1.59e-7
BENCH_GAMMA = 4e-3

_RNG_SEED = 20250811


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str


def li7_params(gamma: float = BENCH_GAMMA, r: float = 0.0) -> GasParamsSI:
    """Lithium-7 parameters with density chosen so rho*a_s**3 = gamma."""
    return GasParamsSI(
        mass_kg=LI7_MASS_KG,
        a_s_m=LI7_A_S_M,
        r_s_m=r * LI7_A_S_M,
        density_per_m3=gamma / LI7_A_S_M ** 3,
    )


# -- direct SI evaluators (independent route) ----------------------------------


def _m_star(params: GasParamsSI) -> float:
    return params.mass_kg / (
        1.0 + 8.0 * math.pi * params.density_per_m3 * params.a_s_m ** 2 * params.r_s_m
    )


def depletion_si_direct(params: GasParamsSI, u: float) -> float:
    """rho_ex in 1/m^3 from the dimensionful closed form."""
    g = coupling_g(params)
    m_gap = math.sqrt(2.0 * g * params.density_per_m3) * u
    m_star = _m_star(params)
    ratio = m_star / params.mass_kg
    return (
        (2.0 * m_star) ** 1.5 * m_gap ** 3 / (24.0 * math.pi ** 2 * HBAR ** 3)
        * (2.0 * math.sqrt(ratio) - 1.0 / math.sqrt(ratio))
    )


def mu_si_direct(params: GasParamsSI, u: float) -> float:
    """mu in J from the dimensionful closed form."""
    g = coupling_g(params)
    rho = params.density_per_m3
    m_gap = math.sqrt(2.0 * g * rho) * u
    m_star = _m_star(params)
    return g * rho + (
        (2.0 * m_star) ** 1.5 * m_gap ** 3 * g
        * math.sqrt(m_star / params.mass_kg)
        / (6.0 * math.pi ** 2 * HBAR ** 3)
    )


def pressure_si_direct(params: GasParamsSI, u: float) -> float:
    """P in J/m^3 from the dimensionful closed form."""
    g = coupling_g(params)
    rho = params.density_per_m3
    m_gap = math.sqrt(2.0 * g * rho) * u
    m_star = _m_star(params)
    root_ratio = math.sqrt(m_star / params.mass_kg)
    return (g * rho ** 2 / 2.0) * (
        1.0
        + (2.0 * m_star) ** 1.5 * m_gap ** 3 * root_ratio
        / (3.0 * math.pi ** 2 * HBAR ** 3 * rho)
        - (2.0 * m_star) ** 1.5 * m_gap ** 5 * root_ratio
        / (15.0 * math.pi ** 2 * HBAR ** 3 * g * rho ** 2)
        + 2.0 * m_star ** 3 * m_gap ** 6 * root_ratio
        / (9.0 * math.pi ** 4 * HBAR ** 6 * rho ** 2)
    )


# -- individual checks ----------------------------------------------------------


def _fmt_slots(rows) -> str:
    parts = [
        f"{hs.format_term(n, p, j, qa) or '0'} vs expected {hs.format_term(n, p, j, qb) or '0'}"
        for n, p, j, qa, qb in rows
    ]
    return "; ".join(parts)


def _check_series(which: str, drop_m2: bool) -> CheckResult:
    derived = hs.expand_quantity(which, hs.MAX_ORDER, drop_m2)
    printed = hs.printed_reference(which)
    rows = hs.diff_terms(derived, printed)
    if not rows:
        count = sum(1 for _ in printed.iter_terms())
        return CheckResult(f"series_{which}", True, f"all {count} kept coefficients match exactly")
    return CheckResult(f"series_{which}", False, _fmt_slots(rows))


def _check_legendre_series(drop_m2: bool) -> CheckResult:
    combo = 2 * hs.expand_quantity("mu", hs.MAX_ORDER, drop_m2) - hs.expand_quantity(
        "pressure", hs.MAX_ORDER, drop_m2
    )
    energy = hs.expand_quantity("energy", hs.MAX_ORDER, drop_m2)
    rows = hs.diff_terms(combo, energy)
    if not rows:
        return CheckResult("legendre_series", True, "2*mu - pressure = energy at every slot")
    return CheckResult("legendre_series", False, _fmt_slots(rows))


def _check_legendre_numeric() -> CheckResult:
    rng = np.random.default_rng(_RNG_SEED)
    worst = 0.0
    for _ in range(1000):
        gamma = 10.0 ** rng.uniform(-8.0, math.log10(4e-3))
        r = rng.uniform(-1.0, 1.0)
        point = state_point(gamma, r)
        u = solve_exact(kappa_of(point))
        mu = mu_ratio(point, u)
        rel = abs(energy_ratio(point, u) + pressure_ratio(point, u) - 2.0 * mu) / abs(mu)
        worst = max(worst, rel)
    passed = worst <= 1e-14
    return CheckResult(
        "legendre_numeric", passed, f"max |E+P-2mu|/|mu| = {worst:.3e} (budget 1e-14)"
    )


def _check_sound_chain(drop_m2: bool) -> CheckResult:
    mu = hs.expand_quantity("mu", hs.MAX_ORDER, drop_m2)
    derived = hs._keep_printed_slots(hs.sqrt_series(hs.rho_log_derivative(mu)))
    sound = hs.expand_quantity("sound", hs.MAX_ORDER, drop_m2)
    rows = hs.diff_terms(derived, sound)
    if not rows:
        return CheckResult(
            "sound_chain", True, "sqrt(S + gamma dS/dgamma) of mu matches the sound series"
        )
    return CheckResult("sound_chain", False, _fmt_slots(rows))


def _check_sound_fd() -> CheckResult:
    gamma, r = 1e-6, 0.5
    fd = sound_ratio_fd(gamma, r, mode="exact")
    series_value = hs.expand_quantity("sound").evaluate(gamma, r)
    rel = abs(fd / series_value - 1.0)
    passed = rel <= 1e-6
    return CheckResult(
        "sound_fd",
        passed,
        f"finite difference vs series at gamma=1e-6 r=0.5: rel dev {rel:.3e} (budget 1e-6)",
    )


def _check_quadrature() -> list[CheckResult]:
    results = []
    for name, fn, target in (
        ("quad_p11", p11_T0_dimensionless, 2.0 / 3.0),
        ("quad_p22", p22_T0_dimensionless, -1.0 / 3.0),
    ):
        value = fn()
        rel = abs(value - target) / abs(target)
        results.append(
            CheckResult(name, rel <= 1e-8, f"got {value:.12f} target {target:.12f} rel {rel:.3e}")
        )
    return results


def _check_gap_closure(kappa_scale: float) -> CheckResult:
    rng = np.random.default_rng(_RNG_SEED + 1)
    worst = 0.0
    for _ in range(100):
        gamma = 10.0 ** rng.uniform(-8.0, math.log10(4e-3))
        r = rng.uniform(-1.0, 1.0)
        params = li7_params(gamma, r)
        point = reduce(params)
        u = solve_exact(kappa_of(point) * kappa_scale)
        scale = 2.0 * coupling_g(params) * params.density_per_m3
        worst = max(worst, abs(gap_closure_residual(params, u)) / scale)
    passed = worst <= 1e-12
    return CheckResult(
        "gap_closure", passed, f"max |residual|/(2 g rho) = {worst:.3e} (budget 1e-12)"
    )


def _check_si_roundtrip(r: float) -> CheckResult:
    params = li7_params(BENCH_GAMMA, r)
    point = reduce(params)
    u = solve_exact(kappa_of(point))
    scales = energy_scales(params)
    rho = params.density_per_m3
    comparisons = (
        ("depletion", depletion_fraction(point, u) * rho, depletion_si_direct(params, u)),
        ("mu", mu_ratio(point, u) * scales.g_rho, mu_si_direct(params, u)),
        ("pressure", pressure_ratio(point, u) * scales.g_rho * rho / 2.0, pressure_si_direct(params, u)),
    )
    worst = max(abs(a / b - 1.0) for _, a, b in comparisons)
    passed = worst <= 1e-12
    label = f"si_roundtrip_r{r:g}".replace("-", "m").replace(".", "p")
    return CheckResult(label, passed, f"max rel dev pipeline vs direct SI = {worst:.3e}")


def _check_order_scaling() -> CheckResult:
    kappas = np.logspace(-4.0, -2.0, 20)
    diffs = np.array([abs(solve_exact(k) - solve_perturbative(k)) for k in kappas])
    slope = float(np.polyfit(np.log(kappas), np.log(diffs), 1)[0])
    passed = slope >= 2.9
    return CheckResult(
        "order_scaling", passed, f"log-log slope of |u_exact - u_pert| vs kappa = {slope:.4f}"
    )


def run_validation(drop_m2: bool = False, kappa_scale: float = 1.0) -> list[CheckResult]:
    """Run every check; drop_m2 feeds the series comparisons only, and
    kappa_scale is a fault-injection hook for the gap-closure check."""
    results: list[CheckResult] = []
    for which in hs.QUANTITIES:
        results.append(_check_series(which, drop_m2))
    results.append(_check_legendre_series(drop_m2))
    results.append(_check_legendre_numeric())
    results.append(_check_sound_chain(drop_m2))
    results.append(_check_sound_fd())
    results.extend(_check_quadrature())
    results.append(_check_gap_closure(kappa_scale))
    results.append(_check_si_roundtrip(0.0))
    results.append(_check_si_roundtrip(1.0))
    results.append(_check_order_scaling())
    return results

"""Dimensional inputs and the SI <-> dimensionless bridge.

Everything downstream of this module works on the dimensionless pair
(gamma, r) = (rho * a_s**3, r_s / a_s).  SI quantities enter and leave only
here, which makes the dimensional round trip usable as a consistency oracle
for the rest of the pipeline.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import RangeDomainError

# CODATA 2018; the only physical constants used anywhere in the package.
HBAR = 1.054571817e-34  # J s
K_B = 1.380649e-23      # J / K (exact)

# Weak-coupling validity bounds: the low-density expansions assume a dilute
# gas, and the finite-range rescaling of the mass should stay moderate.
WEAK_COUPLING_SQRT_GAMMA = 0.1
WEAK_COUPLING_T = 0.5


@dataclass(frozen=True)
class GasParamsSI:
    """Dimensional gas parameters.

    mass_kg         atomic mass m
    a_s_m           s-wave scattering length a_s (> 0)
    r_s_m           effective range r_s (either sign)
    density_per_m3  number density rho
    """

    mass_kg: float
    a_s_m: float
    r_s_m: float
    density_per_m3: float

    def __post_init__(self) -> None:
        if not (self.mass_kg > 0.0):
            raise ValueError(f"mass_kg must be positive, got {self.mass_kg}")
        if not (self.a_s_m > 0.0):
            raise ValueError(f"a_s_m must be positive, got {self.a_s_m}")
        if not (self.density_per_m3 > 0.0):
            raise ValueError(
                f"density_per_m3 must be positive, got {self.density_per_m3}"
            )


@dataclass(frozen=True)
class StatePoint:
    """Dimensionless state: gas parameter gamma, range ratio r, and the
    derived t = 8*pi*gamma*r and mass ratio s = m*/m = 1/(1+t)."""

    gamma: float
    r: float
    t: float
    s: float


def state_point(gamma: float, r: float) -> StatePoint:
    """Build a StatePoint from (gamma, r), rejecting unphysical states."""
    if not (math.isfinite(gamma) and gamma > 0.0):
        raise ValueError(f"gamma must be positive and finite, got {gamma}")
    if not math.isfinite(r):
        raise ValueError(f"r must be finite, got {r}")
    t = 8.0 * math.pi * gamma * r
    if 1.0 + t <= 0.0:
        raise RangeDomainError(
            f"1 + 8*pi*gamma*r = {1.0 + t:.6g} <= 0: modified mass undefined"
        )
    return StatePoint(gamma=gamma, r=r, t=t, s=1.0 / (1.0 + t))


def reduce(params: GasParamsSI) -> StatePoint:
    """Reduce SI parameters to the dimensionless state (gamma, r)."""
    gamma = params.density_per_m3 * params.a_s_m ** 3
    r = params.r_s_m / params.a_s_m
    return state_point(gamma, r)


def coupling_g(params: GasParamsSI) -> float:
    """Contact coupling g = 4 pi hbar^2 a_s / m, in J m^3 (first Born)."""
    return 4.0 * math.pi * HBAR ** 2 * params.a_s_m / params.mass_kg


def coupling_lambda(params: GasParamsSI) -> float:
    """Finite-range coupling lambda = 2 pi hbar^2 a_s^2 r_s / m, in J m^5.

    Carries the sign of r_s."""
    return (
        2.0 * math.pi * HBAR ** 2 * params.a_s_m ** 2 * params.r_s_m
        / params.mass_kg
    )


@dataclass(frozen=True)
class EnergyScales:
    """Scales that re-dimensionalize the dimensionless ratios.

    g_rho    mean-field energy scale g*rho [J]
    m_scale  sqrt(2 g rho), the gap-parameter scale [J^(1/2)]
    c0       Bogoliubov sound speed sqrt(g rho / m) [m/s]
    """

    g_rho: float
    m_scale: float
    c0: float


def energy_scales(params: GasParamsSI) -> EnergyScales:
    g_rho = coupling_g(params) * params.density_per_m3
    return EnergyScales(
        g_rho=g_rho,
        m_scale=math.sqrt(2.0 * g_rho),
        c0=math.sqrt(g_rho / params.mass_kg),
    )


def validity_flags(point: StatePoint) -> tuple[str, ...]:
    """Non-fatal validity warnings for a state point."""
    flags = []
    if math.sqrt(point.gamma) > WEAK_COUPLING_SQRT_GAMMA or abs(point.t) > WEAK_COUPLING_T:
        flags.append("weak_coupling")
    return tuple(flags)

"""Self-consistent solver for the gap (effective-mass) parameter.

Writing the gap parameter as M = sqrt(2 g rho) * u turns the dimensionful
self-consistency condition into a single cubic relation

    u**2 + kappa * u**3 = 1,      kappa = 32 sqrt(gamma) / (3 sqrt(pi) (1+t)**2)

with t = 8*pi*gamma*r.  The left side is strictly increasing for u > 0 and
kappa >= 0, so the physical root is unique and lies in (0, 1].  The solver
below finds it to residual 1e-14; the perturbative branch evaluates the
second-order truncation u = 1 - kappa/2 + (5/8) kappa**2.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

from .errors import ConvergenceError
from .units import GasParamsSI, StatePoint, coupling_g

_MAX_ITERATIONS = 100
_ROOT_TOL = 1e-14
_SQRT_PI = math.sqrt(math.pi)


@dataclass(frozen=True)
class GapSolution:
    """Exact and perturbative reduced roots at one state point."""

    kappa: float
    u_exact: float
    u_pert: float
    residual: float
    iterations: int


def kappa_of(point: StatePoint) -> float:
    """Dimensionless self-consistency strength kappa(gamma, r)."""
    return 32.0 * math.sqrt(point.gamma) / (3.0 * _SQRT_PI) * point.s * point.s


def solve_perturbative(kappa: float, drop_m2: bool = False) -> float:
    """Second-order perturbative root; drop_m2 omits the kappa**2 term."""
    if drop_m2:
        return 1.0 - 0.5 * kappa
    return 1.0 - 0.5 * kappa + 0.625 * kappa * kappa


def gap_residual(u: float, kappa: float) -> float:
    """|u**2 + kappa u**3 - 1|."""
    return abs(u * u + kappa * u ** 3 - 1.0)


def _newton(kappa: float) -> tuple[float, int]:
    # f(0) = -1 and f(1) = kappa >= 0, so [0, 1] always brackets the root.
    lo, hi = 0.0, 1.0
    u = solve_perturbative(kappa)
    if not (lo < u < hi):
        u = 0.5 * (lo + hi)
    for iteration in range(1, _MAX_ITERATIONS + 1):
        f = u * u + kappa * u ** 3 - 1.0
        if abs(f) <= _ROOT_TOL:
            return u, iteration
        if f > 0.0:
            hi = u
        else:
            lo = u
        derivative = 2.0 * u + 3.0 * kappa * u * u
        candidate = u - f / derivative
        if not (lo < candidate < hi):
            candidate = 0.5 * (lo + hi)
        if candidate == u:
            # Bracket exhausted at float resolution.
            candidate = 0.5 * (lo + hi)
            if candidate == u:
                return u, iteration
        u = candidate
    raise ConvergenceError(
        f"gap solver exhausted {_MAX_ITERATIONS} iterations at kappa={kappa!r}"
    )


def solve_exact(kappa: float) -> float:
    """Unique positive root of u**2 + kappa u**3 = 1, residual <= 1e-14."""
    if kappa < 0.0:
        raise ValueError(f"kappa must be nonnegative, got {kappa}")
    if kappa == 0.0:
        return 1.0
    u, _ = _newton(kappa)
    return u


def solve(point: StatePoint, drop_m2: bool = False) -> GapSolution:
    """Solve the gap condition at a state point, exactly and perturbatively."""
    kappa = kappa_of(point)
    if kappa == 0.0:
        u, iterations = 1.0, 0
    else:
        u, iterations = _newton(kappa)
    return GapSolution(
        kappa=kappa,
        u_exact=u,
        u_pert=solve_perturbative(kappa, drop_m2),
        residual=gap_residual(u, kappa),
        iterations=iterations,
    )


def m_dimensionful(u: float, params: GasParamsSI) -> float:
    """Gap parameter M = sqrt(2 g rho) * u in SI units (J^(1/2))."""
    if not (u > 0.0):
        raise ValueError(f"u must be positive, got {u}")
    return math.sqrt(2.0 * coupling_g(params) * params.density_per_m3) * u

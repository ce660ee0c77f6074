"""Zero-temperature equation of state of a weakly interacting Bose gas with
finite-range (effective-range) interaction corrections.

The package solves the self-consistent gap condition for the effective-mass
parameter exactly and perturbatively, evaluates the beyond-mean-field
thermodynamic ratios (quantum depletion, chemical potential, pressure,
ground-state energy, speed of sound) and the gapless excitation spectrum,
and carries an exact-rational series engine plus quadrature oracles that
verify the printed low-density expansion coefficients and the thermodynamic
identities relating them.
"""

from .errors import (
    ConvergenceError,
    NonPositiveCompressibility,
    NonUnitConstantTerm,
    QuadratureFailure,
    RangeDomainError,
)
from .units import (
    HBAR,
    K_B,
    EnergyScales,
    GasParamsSI,
    StatePoint,
    coupling_g,
    coupling_lambda,
    energy_scales,
    reduce,
    state_point,
    validity_flags,
)
from .gap import (
    GapSolution,
    gap_residual,
    kappa_of,
    m_dimensionful,
    solve,
    solve_exact,
    solve_perturbative,
)
from .eos import (
    MODES,
    DispersionSample,
    EosReport,
    build_report,
    depletion_fraction,
    dispersion,
    energy_ratio,
    mu_ratio,
    pressure_ratio,
    sound_ratio_fd,
    sound_ratio_numeric,
)
from .series import (
    MAX_ORDER,
    QUANTITIES,
    HalfSeries,
    binomial_series,
    diff_terms,
    expand_quantity,
    format_series,
    printed_reference,
    rho_log_derivative,
    sqrt_series,
    t_series,
    u_series,
)
from .quadrature import (
    closed_form_P11,
    closed_form_P22,
    gap_closure_residual,
    p11_T0_dimensionless,
    p22_T0_dimensionless,
    thermal_parts,
)
from .validate import CheckResult, li7_params, run_validation

__version__ = "0.1.0"

__all__ = [
    "HBAR",
    "K_B",
    "MAX_ORDER",
    "MODES",
    "QUANTITIES",
    "CheckResult",
    "ConvergenceError",
    "DispersionSample",
    "EnergyScales",
    "EosReport",
    "GapSolution",
    "GasParamsSI",
    "HalfSeries",
    "NonPositiveCompressibility",
    "NonUnitConstantTerm",
    "QuadratureFailure",
    "RangeDomainError",
    "StatePoint",
    "binomial_series",
    "build_report",
    "closed_form_P11",
    "closed_form_P22",
    "coupling_g",
    "coupling_lambda",
    "depletion_fraction",
    "diff_terms",
    "dispersion",
    "energy_ratio",
    "energy_scales",
    "expand_quantity",
    "format_series",
    "gap_closure_residual",
    "gap_residual",
    "kappa_of",
    "li7_params",
    "m_dimensionful",
    "mu_ratio",
    "p11_T0_dimensionless",
    "p22_T0_dimensionless",
    "pressure_ratio",
    "printed_reference",
    "reduce",
    "rho_log_derivative",
    "run_validation",
    "solve",
    "solve_exact",
    "solve_perturbative",
    "sound_ratio_fd",
    "sound_ratio_numeric",
    "sqrt_series",
    "state_point",
    "t_series",
    "thermal_parts",
    "u_series",
    "validity_flags",
]

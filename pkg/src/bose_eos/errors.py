"""Exception types shared across the package."""


class RangeDomainError(ValueError):
    """The finite-range state is unphysical: 1 + 8*pi*gamma*r <= 0, so the
    modified mass (and every square root built on it) is undefined."""


class ConvergenceError(RuntimeError):
    """An iterative solver exhausted its iteration budget."""


class NonPositiveCompressibility(RuntimeError):
    """d(mu)/d(rho) <= 0 was encountered while differencing the chemical
    potential, which signals evaluation outside the validity domain."""


class QuadratureFailure(RuntimeError):
    """A numerical quadrature reported an error estimate above budget."""


class NonUnitConstantTerm(ValueError):
    """A series operation required a series with constant term exactly 1."""

"""Exception types shared across the package."""


class CovoscError(Exception):
    """Base class for every error this package raises deliberately."""


class DomainError(CovoscError, ValueError):
    """Input value outside the physically meaningful domain."""


class CapabilityError(CovoscError, ValueError):
    """Request beyond a configured cap (polynomial degree, quadrature order, ...)."""


class ConfigError(CovoscError, ValueError):
    """Malformed grid or run configuration."""


class NumericIntegrityError(CovoscError, ArithmeticError):
    """A computed quantity failed an internal consistency check."""

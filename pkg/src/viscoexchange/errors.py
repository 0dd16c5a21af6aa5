"""Exception types shared across the package.

The CLI maps these onto exit codes: configuration problems exit with 2,
numerical failures (non-finite results) with 3.
"""


class ViscoExchangeError(Exception):
    """Base class for all package errors."""


class ConfigError(ViscoExchangeError):
    """Invalid configuration: bad file, bad schema, bad grid, bad solver setup."""


class DomainError(ViscoExchangeError, ValueError):
    """An input value is outside the mathematical domain of an operation."""


class NumericalFailure(ViscoExchangeError, ArithmeticError):
    """A computation produced a non-finite intermediate or result."""

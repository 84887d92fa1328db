"""Exception types shared across the package."""


class FracflowError(Exception):
    """Base class for all package-specific errors."""


class DomainError(FracflowError, ValueError):
    """An argument lies outside the supported domain."""


class ConvergenceError(FracflowError, RuntimeError):
    """A series hit its term cap (or the double range) before reaching tolerance."""


class SolverBreakdownError(FracflowError, RuntimeError):
    """Tridiagonal elimination hit a near-zero pivot or produced non-finite values."""

    def __init__(self, message: str, step: int | None = None):
        super().__init__(message)
        self.step = step


class ExactSchemeError(FracflowError):
    """An error sequence is at rounding level; no convergence order can be fitted."""


class ConfigError(FracflowError, ValueError):
    """Invalid run configuration; carries the offending field name."""

    def __init__(self, field: str, message: str):
        super().__init__(f"{field}: {message}")
        self.field = field

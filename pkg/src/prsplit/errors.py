"""Exception hierarchy for prsplit.

Two families exist so the CLI can map failures to exit codes: configuration
problems (exit 2) and numerical failures (exit 3).
"""

from typing import Any, Optional

EXIT_CONFIGURATION = 2
EXIT_NUMERICAL = 3


class SplitError(Exception):
    """Base class for all prsplit errors."""

    exit_code: int = 1


# === Configuration family ===

class ConfigurationError(SplitError):
    """Invalid input: bad config file, bad flags, inconsistent run spec."""

    exit_code = EXIT_CONFIGURATION


class GridConfigurationError(ConfigurationError):
    """Grid resolution or domain cannot be used."""


class GridMismatchError(ConfigurationError):
    """Two objects that must share a grid do not."""


class StabilityViolation(ConfigurationError):
    """Step size violates h*max{M[A], M[F]} bound while stability is enforced."""


class OracleScaleError(ConfigurationError):
    """Dense oracle requested on a grid that is too large."""


class InvalidArgumentError(ConfigurationError, ValueError):
    """A function precondition on its arguments does not hold."""


# === Numerical family ===

class NumericalError(SplitError):
    """A computation failed or produced unusable numbers."""

    exit_code = EXIT_NUMERICAL


class NumericalHealthError(NumericalError):
    """A quantity that must be nonnegative or finite is not."""


class NonFiniteStateError(NumericalHealthError):
    """A state contains NaN or Inf."""

    def __init__(self, step: Optional[int] = None, message: str = "") -> None:
        self.step = step
        where = f" at step {step}" if step is not None else ""
        super().__init__(message or f"non-finite values in state{where}")


class StepSizeError(NumericalError):
    """The step size is outside the range where a resolvent is well defined."""


class ResolventFailure(NumericalError):
    """The pointwise nonlinear resolvent could not be solved."""

    def __init__(self, location: tuple[int, ...], residual: float, message: str = "") -> None:
        self.location = location
        self.residual = residual
        super().__init__(
            message or f"nonlinear resolvent failed at grid point {location} "
            f"(residual {residual:.3e})"
        )


class StepFailure(NumericalError):
    """A time step could not be completed."""

    def __init__(self, step: int, cause: Exception) -> None:
        self.step = step
        self.cause = cause
        super().__init__(f"step {step} failed: {cause}")


class IterationError(NumericalError):
    """An iterative solver did not converge."""

    def __init__(self, message: str, iterate: Any = None, residual: float = float("nan")) -> None:
        self.iterate = iterate
        self.residual = residual
        super().__init__(f"{message} (last residual {residual:.3e})")


class DegenerateMeasurementError(NumericalError):
    """Error measurements that cannot be used to estimate an order."""


class OracleFailure(NumericalError):
    """A brute-force oracle diverged."""


class StabilityWarning(UserWarning):
    """Step size violates the stability hypothesis; integration continues."""

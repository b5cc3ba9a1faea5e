"""Exception types shared across the toolkit."""


class TorquillError(Exception):
    """Base class for toolkit errors."""


class DomainError(TorquillError, ValueError):
    """Input outside the physical or numerical domain of an operation."""


class FitError(TorquillError, RuntimeError):
    """A least-squares fit failed to converge or the input is degenerate."""


class ConfigError(TorquillError, ValueError):
    """Invalid scenario configuration; carries the offending field path."""

    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")

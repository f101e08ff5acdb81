"""Exception types shared across the package."""


class CircuitParseError(ValueError):
    """Raised when a circuit file cannot be parsed. Carries the line number."""

    def __init__(self, line_no: int, message: str):
        super().__init__(f"line {line_no}: {message}")
        self.line_no = line_no


class ConfigError(ValueError):
    """Raised for missing or malformed configuration values."""


class FactorizationError(RuntimeError):
    """Raised when a period does not yield nontrivial factors; caller retries with another base."""


class VerificationError(AssertionError):
    """Raised when a built-in consistency check fails."""

"""Exception types shared across the package."""


class GraphInputError(ValueError):
    """Raised for structurally invalid graph input (bad endpoint, self-loop)."""


class ConfigError(ValueError):
    """Raised for invalid generator or experiment configuration."""


class ParseError(ValueError):
    """Raised for malformed instance text; carries a 1-based line number."""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        if line_no is not None:
            message = f"line {line_no}: {message}"
        super().__init__(message)


class DimacsWarning(UserWarning):
    """Non-fatal inconsistency in a DIMACS file (e.g. declared edge count off)."""

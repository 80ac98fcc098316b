class GraphParseError(ValueError):
    """Malformed graph input. ``line`` is 1-based when known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        super().__init__(f"line {line}: {message}" if line is not None else message)


class GuardExceeded(RuntimeError):
    """The requested expansion is larger than the configured guard allows."""


class PreconditionError(ValueError):
    """The graph does not satisfy an invariant's precondition."""

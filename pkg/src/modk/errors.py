class ParseError(ValueError):
    """Malformed graph text. ``lineno`` is 1-based."""

    def __init__(self, message, lineno=None):
        self.lineno = lineno
        if lineno is not None:
            message = f"line {lineno}: {message}"
        super().__init__(message)


class InvariantError(RuntimeError):
    """An internal guarantee failed; this is a defect, not bad input."""

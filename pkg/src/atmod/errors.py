"""Exceptions shared across the package."""


class AtmodError(Exception):
    """Base class for all errors raised by atmod."""


class ParseError(AtmodError):
    """Syntax error in a formula, query or theory file."""

    def __init__(self, message, line=None, col=None):
        self.line = line
        self.col = col
        if line is not None:
            message = "%s (line %d, column %d)" % (message, line, col)
        super().__init__(message)


class TheoryError(AtmodError):
    """Semantic problem in a theory file (undeclared names and the like)."""


class ResourceLimitError(AtmodError):
    """A computation would exceed the configured size guards."""

"""Exception hierarchy shared by every tool."""


class QSchurError(ValueError):
    """Base class for all errors raised by qschur-calculus."""


class DomainError(QSchurError):
    """An argument lies outside the domain of an operation."""


class ValidationError(QSchurError):
    """A word, weight or boundary is malformed."""


class CompositionError(ValidationError):
    """Two words cannot be composed; ``position`` is the first mismatch."""

    def __init__(self, message: str, position: int | None = None):
        super().__init__(message)
        self.position = position


class AlphabetSizeError(QSchurError):
    """The super-Schur basis is degenerate for the requested expansion."""


class TextFormatError(ValidationError):
    """A diagram or Soergel word file could not be parsed."""

    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line

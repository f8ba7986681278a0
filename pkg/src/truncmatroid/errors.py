"""Exception types shared across the package."""


class DomainError(ValueError):
    """An argument lies outside the domain of an operation."""


class PreconditionError(DomainError):
    """A structural precondition (connectivity, simplicity, ...) fails."""


class ConfigurationError(ValueError):
    """A search or enumeration bound is out of range."""


class Graph6Error(ValueError):
    """Malformed graph6 input; ``offset`` is the byte where parsing failed."""

    def __init__(self, message, offset):
        super().__init__(f"{message} (at byte {offset})")
        self.reason = message
        self.offset = offset


class TheoremViolation(RuntimeError):
    """Raised when a pair contradicts the characterization.

    ``certificate`` holds JSON-ready data describing the offending pair.
    """

    def __init__(self, message, certificate=None):
        super().__init__(message)
        self.certificate = certificate or {}

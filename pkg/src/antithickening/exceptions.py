"""Exception hierarchy shared by every module of the package."""


class TrigraphError(Exception):
    """Base class for all errors raised by this package."""


class DomainError(TrigraphError, ValueError):
    """An argument lies outside the domain of the operation."""


class ParseError(DomainError):
    """Malformed trigraph or map text."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class CapExceeded(DomainError):
    """A brute-force routine refused an instance above its size cap."""

    def __init__(self, what: str, n: int, cap: int):
        self.n = n
        self.cap = cap
        super().__init__(f"{what}: n={n} exceeds cap {cap}")


class StructuralError(TrigraphError):
    """The input does not have the structure an algorithm relies on."""


class InputRejected(StructuralError):
    """The main algorithm refused its input (disconnected or degenerate)."""

    def __init__(self, message: str, classification=None):
        self.classification = classification
        super().__init__(message)


class SamplingBudgetExceeded(TrigraphError, RuntimeError):
    """Rejection sampling ran out of attempts."""

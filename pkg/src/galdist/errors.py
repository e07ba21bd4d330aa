class DomainError(Exception):
    """Base class for errors the CLI reports with exit code 1."""


class RegistryError(DomainError, LookupError):
    pass


class PreconditionError(DomainError, ValueError):
    pass


class RangeError(DomainError, ValueError):
    """Parameters fall outside the range where a rule is stated."""


class InternalConsistencyError(DomainError, RuntimeError):
    """An invariant that the algorithms rely on was violated."""


class ParseError(ValueError):
    def __init__(self, message, position=None, expected=()):
        self.position = position
        self.expected = tuple(expected)
        text = message
        if position is not None:
            text += f" at position {position}"
        if self.expected:
            text += f" (expected {', '.join(self.expected)})"
        super().__init__(text)

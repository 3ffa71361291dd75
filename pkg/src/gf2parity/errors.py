"""Exception types shared across the package."""


class ParityError(Exception):
    """Base class for errors raised by gf2parity."""


class ContractViolation(ParityError, ValueError):
    """An argument breaks an operation's precondition."""


class ParseError(ContractViolation):
    """Malformed edge-list input; carries the 1-based line number."""

    def __init__(self, lineno: int, message: str):
        super().__init__(f"line {lineno}: {message}")
        self.lineno = lineno


class InvariantViolation(ParityError, RuntimeError):
    """Something that the mathematics guarantees did not hold; indicates a bug."""

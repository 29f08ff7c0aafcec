"""Exception types shared across the package."""

from __future__ import annotations


class InputError(ValueError):
    """Malformed or inconsistent user input (maps to CLI exit code 2)."""


class DomainError(ArithmeticError):
    """Arithmetic outside the domain of an operation, e.g. division by zero."""

    def __init__(self, message: str, *operands: object) -> None:
        super().__init__(message)
        self.operands = operands


class InadmissibleSample(DomainError):
    """A parameter assignment makes a declared denominator or constraint vanish."""


class PreconditionError(Exception):
    """A construction was refused because its hypothesis does not hold.

    ``report`` carries the failing verification (with counterexample).
    """

    def __init__(self, message: str, report: object = None) -> None:
        super().__init__(message)
        self.report = report

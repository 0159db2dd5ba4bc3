"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class SuperstringError(Exception):
    """Base class for all domain errors raised by this package."""


class InstanceError(SuperstringError, ValueError):
    """The raw input cannot form a valid equal-length instance."""

    def __init__(self, message: str, index: int | None = None):
        super().__init__(message)
        self.index = index


class EmptyInput(InstanceError):
    pass


class UnequalLengths(InstanceError):
    pass


class DuplicateString(InstanceError):
    pass


class RTooSmall(SuperstringError, ValueError):
    pass


class ContigTooShort(SuperstringError, ValueError):
    pass


class EmptyGraph(SuperstringError, ValueError):
    pass


class BadLevelCount(SuperstringError, ValueError):
    pass


class InstanceTooLarge(SuperstringError, ValueError):
    pass


class MissingTrace(SuperstringError, ValueError):
    pass


class DomainError(SuperstringError, ValueError):
    """A bound formula was evaluated outside its domain."""


class InfeasibleGeneration(SuperstringError, ValueError):
    pass


class ParseError(SuperstringError, ValueError):
    def __init__(self, message: str, line: int | None = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line

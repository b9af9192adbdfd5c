"""Exception hierarchy shared by every racopt module."""

from typing import Sequence


class RacoptError(Exception):
    """Base class for all racopt errors."""


class InvalidInputError(RacoptError, ValueError):
    """Malformed parameters, matrices, words, permutations or weights."""


class IncompatibleWordsError(InvalidInputError):
    """Two words that should have equal length do not."""


class DomainError(InvalidInputError):
    """Parameters fall outside the regime a construction is defined for."""


class PreconditionError(InvalidInputError):
    """One or more labelled preconditions of an operation failed."""

    def __init__(self, message: str, conditions: Sequence[str]):
        super().__init__(message)
        self.conditions = tuple(conditions)


class EnumerationCapError(RacoptError, RuntimeError):
    """An exhaustive scan would exceed the configured cap."""

    def __init__(self, what: str, size: int, cap: int):
        super().__init__(
            f"refusing to enumerate {size} {what}: exceeds the cap of {cap} "
            f"(use --force or raise --cap)"
        )
        self.what = what
        self.size = size
        self.cap = cap

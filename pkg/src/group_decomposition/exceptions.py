"""
Exception hierarchy for the group decomposition toolkit.
The CLI maps InputError to exit code 2 and DomainError to exit code 1.
"""

from typing import Optional, Tuple


class GroupDecompositionError(Exception):
    """Base class for all toolkit errors."""

    exit_code = 1


class InputError(GroupDecompositionError, ValueError):
    """Malformed user input: specs, files, flags."""

    exit_code = 2


class GroupSpecError(InputError):
    """A group-spec string does not follow the grammar."""


class TableFormatError(InputError):
    """A Cayley table file could not be parsed."""

    def __init__(self, message: str, line: Optional[int] = None):
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)
        self.line = line


class ElementRangeError(InputError, IndexError):
    """An element index outside [0, n)."""


class GroupValidationError(InputError):
    """A multiplication table violates a group axiom."""

    def __init__(self, kind: str, message: str, witness: Tuple[int, ...] = ()):
        super().__init__(f"{kind}: {message}")
        self.kind = kind
        self.witness = witness


class DomainError(GroupDecompositionError, ValueError):
    """Valid input outside the domain of a computation."""

    exit_code = 1


class ThetaDomainError(DomainError):
    """Theta and the bounds built on it need a group of order at least 3."""


class InstanceTooLargeError(DomainError):
    """An enumeration or backend cap would be exceeded."""


class InternalConsistencyError(DomainError):
    """A mathematically impossible state was reached."""

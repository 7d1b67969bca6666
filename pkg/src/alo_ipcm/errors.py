"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class AloIpcmError(Exception):
    """Base class for all errors raised by :mod:`alo_ipcm`."""


class ScaleMismatch(AloIpcmError, ValueError):
    """Operands belong to different groups (scales)."""


class DomainError(AloIpcmError, ValueError):
    """A value lies outside the open domain of its group."""


class InvalidArgument(AloIpcmError, ValueError):
    """An argument is malformed (bad root order, bad permutation, ...)."""


class EmptyInput(AloIpcmError, ValueError):
    """An aggregation was asked to work on no elements."""


class OrderViolation(AloIpcmError, ValueError):
    """An interval was given with its lower endpoint above the upper one."""


class InvalidMatrix(AloIpcmError, ValueError):
    """A matrix is not square, too small, or has a non-identity diagonal."""


class NotReciprocal(AloIpcmError, ValueError):
    """The operation requires a reciprocal matrix."""


class OrderTooSmall(AloIpcmError, ValueError):
    """The matrix order is below the minimum the operation accepts."""


class OrderTooLargeForSearch(AloIpcmError, ValueError):
    """The permutation search was asked to run above its configured cap."""

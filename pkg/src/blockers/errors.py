"""Exception hierarchy shared by every module of the package."""

from __future__ import annotations


class BlockerError(ValueError):
    """Base class for all errors raised by this package."""


class PreconditionError(BlockerError):
    """An operation was applied where its precondition does not hold."""


class NotInClassError(BlockerError):
    """The input graph is outside the class a solver or recognizer needs."""


class SizeGuardError(BlockerError):
    """The input is too large for exact (exponential-time) computation."""


class WitnessError(BlockerError):
    """Replaying a witness failed at operation ``index``."""

    def __init__(self, index: int, message: str):
        super().__init__(f"operation {index}: {message}")
        self.index = index

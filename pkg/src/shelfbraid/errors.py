"""Exception types shared across the package."""


class ShelfBraidError(Exception):
    """Base class for all errors raised by shelfbraid."""


class BraidParseError(ShelfBraidError, ValueError):
    """Raised when text cannot be read as a braid word, term or other object."""


class NotShifted(ShelfBraidError, ValueError):
    """Raised when a word expected to lie in the image of the shift uses sigma_1."""


class CapExceeded(ShelfBraidError, RuntimeError):
    """A configured work cap was hit before the computation finished.

    This is a diagnostic, never a wrong answer: the algorithms involved all
    terminate, the caps only guard against runaway cost or bugs.
    """

    def __init__(self, message, *, reached=None):
        super().__init__(message)
        self.reached = reached


class NotDivisible(ShelfBraidError, ValueError):
    """Raised by left division when no quotient exists."""


class ActionUndefined(ShelfBraidError, ValueError):
    """The partial braid action failed at some letter (1-based position)."""

    def __init__(self, position):
        super().__init__(f"action undefined at letter {position}")
        self.position = position


class EngineInconsistency(ShelfBraidError, AssertionError):
    """Two routes that must agree did not; indicates a bug, not bad input."""

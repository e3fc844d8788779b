"""Exception types raised by the package.

Every domain error derives from :class:`WreathError`, itself a
:class:`ValueError`, so callers can catch one class at the boundary.
"""


class WreathError(ValueError):
    pass


class NotSubtractable(WreathError):
    pass


class NotBijection(WreathError):
    pass


class NotBlockPreserving(WreathError):
    def __init__(self, message, block=None):
        super().__init__(message)
        self.block = block


class DimensionMismatch(WreathError):
    pass


class ShrinkNotAllowed(WreathError):
    pass


class BudgetExceeded(WreathError):
    def __init__(self, message, limit=None):
        super().__init__(message)
        self.limit = limit


class TooSmall(WreathError):
    pass


class NotProper(WreathError):
    pass


class WrongK(WreathError):
    pass


class DuplicateAbscissa(WreathError):
    pass


class TooFewPoints(WreathError):
    pass


class ParseError(WreathError):
    pass


class BoundaryWarning(UserWarning):
    """Issued when a stable coefficient is requested at n equal to a family size."""

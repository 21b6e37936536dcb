class DicirculantError(Exception):
    """
    Base class for every error raised by the :py:mod:`dicirculant` package.
    """


class InvalidPrimeError(DicirculantError, ValueError):
    """
    The order parameter ``p`` is not a prime, or is a prime the requested
    operation does not handle (most closed forms need ``p`` odd).
    """


class DegreeOutOfRangeError(DicirculantError, ValueError):
    pass


class BudgetExceededError(DicirculantError):
    """
    An exhaustive sweep would exceed the configured work budget.
    """


class NonIntegralCountError(DicirculantError, ArithmeticError):
    """
    A quantity that must be an exact integer came out fractional.  This means
    a corrupted cycle index or an inexact division inside a closed form.
    """


class InconsistentCountError(DicirculantError):
    """
    Two independent routes to the same count disagree.
    """

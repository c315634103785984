"""Exceptions shared across the package."""


class EnumerationBoundError(RuntimeError):
    """A brute-force enumeration was refused because it would be too large."""


class IntegralityError(ArithmeticError):
    """An exact computation produced a value that should have been a
    nonnegative integer but is not.  This falsifies the identity under
    test and must surface loudly instead of being rounded away."""


class ConsistencyError(RuntimeError):
    """Two internal routes to the same quantity disagreed beyond tolerance."""

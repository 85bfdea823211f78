"""Exception types shared across the package."""


class NotAMemberError(KeyError):
    """A composition is not an element of the index set it was looked up in."""


class DimensionMismatchError(ValueError):
    """Matrix or vector shapes are incompatible."""


class ArityMismatchError(ValueError):
    """A polynomial has the wrong number of variables for the operation."""


class TheoremViolation(AssertionError):
    """A proved identity failed on a concrete instance.

    This always signals a bug in the implementation, never a mathematical
    finding.
    """

"""Exception hierarchy shared by every module.

All errors derive from :class:`CohSysError`, which is itself a
``ValueError`` so callers that only care about bad input can catch that.
"""


class CohSysError(ValueError):
    pass


class NonExactDivision(CohSysError):
    """Polynomial division left a nonzero remainder."""


class InvalidExponent(CohSysError):
    pass


class InvalidType(CohSysError):
    """The numeric type (n, d, k, g) is outside an operation's domain."""


class InvalidRange(CohSysError):
    pass


class InvalidParams(CohSysError):
    pass


class ParityError(CohSysError):
    """A formula valid only for odd degree was called with even degree."""


class OutOfRange(CohSysError):
    pass


class CriticalAlpha(CohSysError):
    """The requested stability parameter sits exactly on a wall."""


class NegativeCoefficient(CohSysError):
    """A computed Poincare polynomial has a negative Betti number."""

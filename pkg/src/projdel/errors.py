"""Exception hierarchy shared by all modules."""


class ProjDelError(Exception):
    """Base class for errors raised by :mod:`projdel`."""


class PreconditionError(ProjDelError, ValueError):
    """A mathematical precondition of an operation is violated.

    Degree bounds, zero polynomials where a degree is needed and the like.
    The CLI maps this class to exit code 3.
    """


class ZeroPolynomialError(PreconditionError):
    pass


class DegreeBoundError(PreconditionError):
    pass


class NullifiedError(PreconditionError):
    """The polynomial vanishes identically above a base point."""

    def __init__(self, message, point=None, parameter=None):
        super().__init__(message)
        self.point = point
        self.parameter = parameter


class DimensionError(ProjDelError, ValueError):
    pass


class AmbiguousMatchError(ProjDelError):
    """Root branches could not be matched unambiguously after resampling."""

    def __init__(self, message, parameter=None):
        super().__init__(message)
        self.parameter = parameter


class TrackingError(ProjDelError):
    pass


class ParseError(ProjDelError, ValueError):
    """Malformed polynomial expression or JSON document."""

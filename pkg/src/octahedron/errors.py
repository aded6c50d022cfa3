"""Exception types raised by the library."""


class OctahedronError(Exception):
    """Base class for all library errors."""


class DivisionByZero(OctahedronError, ZeroDivisionError):
    """A rational recurrence needed to divide by a zero value.

    ``point`` is the pyramid point (or grid cell) holding the zero.
    """

    def __init__(self, point, message=None):
        self.point = point
        super().__init__(message or f"zero value at {point}; input is not generic")


class SizeLimitExceeded(OctahedronError, ValueError):
    """Exhaustive path enumeration was requested for a too large size."""


class NotSupermodular(OctahedronError, ValueError):
    pass


class NotInMD(OctahedronError, ValueError):
    """The array is not weakly increasing along diagonals."""


class NotInframodular(OctahedronError, ValueError):
    pass


class NegativeCorner(OctahedronError, ValueError):
    """h(n, n) < h(n-1, n-1) for a boundary function."""


class NegativeEntries(OctahedronError, ValueError):
    pass


class NonIntegerEntries(OctahedronError, ValueError):
    pass


class ShapeMismatch(OctahedronError, ValueError):
    pass


class InvalidTableau(OctahedronError, ValueError):
    pass


class InvalidPlanePartition(OctahedronError, ValueError):
    pass

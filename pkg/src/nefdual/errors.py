"""Exception types shared across the library."""


class GeometryError(Exception):
    """Base class for geometric precondition failures."""


class DimensionMismatch(GeometryError):
    """Operands disagree on ambient dimension or on which of the two dual spaces they live in."""


class NotFullDimensional(GeometryError):
    """The operation requires a full-dimensional polytope."""


class ZeroNotInterior(GeometryError):
    """The operation requires the origin strictly inside the polytope."""


class NotReflexive(GeometryError):
    """The operation requires a reflexive base polytope."""


class NotConvex(GeometryError):
    """The operation requires a convex piecewise-linear function."""


class NotPiecewiseLinear(GeometryError):
    """Prescribed vertex values admit no linear extension on some maximal cone."""

    def __init__(self, cone_index: int, message: str = ""):
        super().__init__(message or f"no linear extension on maximal cone {cone_index}")
        self.cone_index = cone_index


class InvariantViolation(Exception):
    """An identity that holds for every valid input failed.

    Never a user error: carries an exact witness and indicates a defect in
    the library itself.
    """

    def __init__(self, message: str, witness=None):
        super().__init__(message)
        self.witness = witness

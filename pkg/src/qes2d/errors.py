"""Exception hierarchy shared by all qes2d modules."""


class QesError(Exception):
    """Base class for all qes2d errors."""


class InvalidParameter(QesError):
    """A potential or solver parameter violates a reality/positivity condition."""

    def __init__(self, name, value, reason):
        self.name = name
        self.value = value
        self.reason = reason
        super().__init__(f"invalid parameter {name}={value!r}: {reason}")


class DomainError(QesError):
    """Radial coordinate outside (0, inf)."""


class FamilyMismatch(QesError):
    """Spec and ansatz profile belong to different potential families."""


class SingularRecurrence(QesError):
    """Forward recurrence hit a vanishing leading coefficient C_k."""

    def __init__(self, index):
        self.index = index
        super().__init__(f"recurrence coefficient C_{index} vanishes; forward solve impossible")


class ConstraintViolated(QesError):
    """Potential parameters do not satisfy the truncation/determinant condition.

    Carries the offending residual and the nearest admissible parameter value.
    """

    def __init__(self, residual, nearest, message):
        self.residual = residual
        self.nearest = nearest
        super().__init__(message)


class NoRealRoots(QesError):
    """Root finder produced no acceptably-real roots."""


class NoSolution(QesError):
    """Constraint solver could not bracket a solution."""


class QuadratureFailure(QesError):
    """Adaptive quadrature could not reach the requested tolerance in budget."""


class GridError(QesError):
    """Finite-difference grid produced non-finite potential values."""

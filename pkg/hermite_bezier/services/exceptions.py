# hermite_bezier/services/exceptions.py
from typing import Any


class HermiteError(Exception):
    """Base class for errors raised by the numerical services."""

    def __init__(self, detail: str, **context: Any):
        self.detail = detail
        self.context = context
        super().__init__(detail)


class DomainValidationError(HermiteError):
    """Invalid geometric input or parameters."""
    pass


class CoincidentPointsError(DomainValidationError):
    """Two consecutive points coincide within the point tolerance."""
    pass


class DegenerateAnglesError(DomainValidationError):
    """The α denominator vanishes (θ₀+θ₁ or θ too close to 2π)."""
    pass


class InadmissiblePairError(DomainValidationError):
    """A pair violates the admissibility conditions of the Bezier average."""

    def __init__(self, detail: str, reason: str, **context: Any):
        self.reason = reason
        super().__init__(detail, reason=reason, **context)


class VanishingTangentError(DomainValidationError):
    """The Bezier derivative vanishes at the requested weight."""
    pass


class AntipodalVectorsError(DomainValidationError):
    """The geodesic between two unit vectors is not unique."""
    pass


class OutOfRangeError(DomainValidationError):
    """A parameter lies outside the admissible range."""
    pass


class DegenerateDenominatorError(DomainValidationError):
    """A square-root argument of the closed-form angle expressions is not positive."""
    pass


class UndefinedAtOriginError(DomainValidationError):
    """The quotient Q is 0/0 at the origin."""
    pass


class NonFunctionalInputError(DomainValidationError):
    """The polyline is not a graph over its first coordinate."""
    pass


class ParameterError(DomainValidationError):
    """Invalid configuration or search parameters."""
    pass


class DataFormatError(DomainValidationError):
    """Malformed Hermite data file."""
    pass


class VerificationFailedError(HermiteError):
    """A certificate or invariant check did not pass."""
    pass

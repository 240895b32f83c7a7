"""Exception hierarchy shared by every theta_orbits module."""

from typing import Any, Dict, Optional, Sequence


class ThetaOrbitsError(Exception):
    """Base class for all errors raised by the package."""


class ParameterError(ThetaOrbitsError, ValueError):
    """Input is malformed or outside the range an operation accepts."""


class VerificationError(ThetaOrbitsError):
    """A closed formula and an independent oracle disagree."""

    def __init__(self, message: str, data: Optional[Dict[str, Any]] = None):
        super().__init__(message)
        self.data = data or {}


class RankAmbiguityError(VerificationError):
    """Singular values sit too close to the rank threshold to decide a rank."""

    def __init__(self, singular_values: Sequence[float], threshold: float, gap: float):
        values = [float(s) for s in singular_values]
        super().__init__(
            f"ambiguous rank: singular values within a factor {gap:g} of threshold {threshold:.3e}",
            data={"singular_values": values, "threshold": threshold, "gap": gap},
        )
        self.singular_values = values
        self.threshold = threshold
        self.gap = gap


class FreenessError(VerificationError):
    """The null-cone recursion produced a negative coefficient."""


class NonCharacterError(VerificationError):
    """Highest-weight stripping met data that is not a character."""


class TruncationError(ThetaOrbitsError):
    """A truncated graded computation did not stabilize within its degree cap."""

    def __init__(self, message: str, partial_value: int, dmax: int):
        super().__init__(message)
        self.partial_value = partial_value
        self.dmax = dmax

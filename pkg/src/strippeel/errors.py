"""Exception hierarchy for geometric and combinatorial failure modes."""


class StripPeelError(Exception):
    """Base class for all library errors."""


class NotHyperbolicError(StripPeelError):
    """An isometry expected to be hyperbolic has |trace| <= 2."""


class NotHyperparallelError(StripPeelError):
    """Two geodesics intersect or are asymptotic, so no common perpendicular exists."""


class NotPerpendicularError(StripPeelError):
    """A geodesic required to be perpendicular to a reference line is not."""


class NonPositiveWidthError(StripPeelError):
    """A strip width must be strictly positive."""


class NonPositiveLengthError(StripPeelError):
    """A boundary length must be strictly positive."""


class BoundaryNotHyperbolicError(StripPeelError):
    """The boundary holonomy is parabolic or elliptic (cusp or cone point)."""


class UnknownGeneratorError(StripPeelError):
    """A word uses a letter that is not a generator of the surface group."""


class UnsupportedTopologyError(StripPeelError):
    """Enumeration is only implemented for the pair of pants and the one-holed torus."""


class TopologyMismatchError(StripPeelError):
    """Two surfaces compared by a metric do not share topology and generators."""


class EmptyClassSetError(StripPeelError):
    """A supremum was requested over an empty enumeration."""


class StripNotEmbeddedError(StripPeelError):
    """The requested strip width is too large: translates of the strip overlap."""


class NonConvergedWallsError(StripPeelError):
    """Wall search hit its word-length bound while still finding walls."""


class BasepointInWallError(StripPeelError):
    """The developing basepoint lies inside a wall; the caller should move it."""

    def __init__(self, message, strip=None, at_image=False):
        super().__init__(message)
        self.strip = strip
        self.at_image = at_image


class TangentWallError(StripPeelError):
    """A developing segment grazes a wall boundary within tolerance."""


class ConstructionError(StripPeelError):
    """A surface constructor failed an internal consistency check."""

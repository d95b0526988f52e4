"""Exception taxonomy for the minkruled geometry kernel."""


class GeometryError(Exception):
    """Base class for every error raised by this package."""


class NullInputError(GeometryError):
    """A causal-sensitive operation received a lightlike vector."""


class DegeneratePlaneError(GeometryError):
    """Two spacelike vectors span a numerically lightlike plane."""


class OrientationMismatchError(GeometryError):
    """Hyperbolic angle between timelike vectors needs equal orientations."""


class OutOfDomainError(GeometryError):
    """Parameter outside the usable domain, stencil margins included."""


class MissingDerivativeError(GeometryError):
    """Analytic-mode curve lacks an evaluator of the requested order."""


class NotUnitSpeedError(GeometryError):
    """Curve fails the unit-speed timelike check."""


class DegenerateFrameError(GeometryError):
    """Moving frame undefined: vanishing curvature or collapsed span."""


class NullDarbouxError(GeometryError):
    """Rotation vector is lightlike; the hyperbolic split does not exist."""


class InvalidFrameError(GeometryError):
    """Initial frame fails orthonormality or orientation requirements."""


class IntegrationError(GeometryError):
    """Frame integration produced a non-finite or unusable state."""


class NullDirectionError(GeometryError):
    """Ruling coefficients have vanishing frame square; cannot normalize."""


class CylindricalRulingError(GeometryError):
    """Striction data requested on a ruling whose derivative vanishes."""


class DegenerateCoefficientError(GeometryError):
    """Angle-profile coefficient undefined for these ruling coefficients."""


class ConfigError(GeometryError):
    """Malformed scene configuration; the message names the offending field."""

"""Exception types shared across the toolkit."""


class GeometryError(Exception):
    """Base class for all toolkit errors."""


class ZeroVector(GeometryError):
    """A vector that must be nonzero has (numerically) zero length."""


class DimensionMismatch(GeometryError):
    """Vector or matrix shapes are incompatible."""


class NonTangentField(GeometryError):
    """A vector that should be tangent to the sphere fails the tangency test."""


class OffManifold(GeometryError):
    """A point that should lie on the unit sphere does not."""


class NonPositiveLambda(GeometryError):
    """Homothety factors must be strictly positive."""


class NonPositiveRadius(GeometryError):
    """Cone radii must be strictly positive."""


class NotComplexSubspace(GeometryError):
    """A subspace that should be invariant under the complex structure is not."""


class KOutOfRange(GeometryError):
    """Requested Gauduchon order is outside the admissible range."""


class ModelMismatch(GeometryError):
    """A transverse cohomology model is inconsistent with the requested computation."""


class ModelFormatError(GeometryError):
    """A transverse-model data file is malformed."""

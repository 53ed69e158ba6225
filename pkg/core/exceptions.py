# Custom exceptions for the failure modes of bierkit.
# Only comment where context is helpful.

class BierKitError(Exception):
    """Base exception for all bierkit errors."""
    pass

class ValidationError(BierKitError):
    """Input failed validation (out-of-range label, ragged matrix, duplicate point...)."""
    def __init__(self, message, value=None):
        super().__init__(message)
        self.value = value

class DecimalParseError(ValidationError):
    """A decimal literal could not be parsed exactly."""
    def __init__(self, message, text=None, position=None):
        super().__init__(message, value=text)
        self.text = text
        self.position = position

class RankDeficiencyError(BierKitError):
    """A linear system expected to be nonsingular is rank deficient."""
    def __init__(self, message, rank=None):
        super().__init__(message)
        self.rank = rank

class DegenerateComplexError(BierKitError):
    """The complex is {∅} or the full simplex where a proper complex is needed."""
    def __init__(self, message, complex_repr=None):
        super().__init__(message)
        self.complex_repr = complex_repr

class DegenerateHullError(BierKitError):
    def __init__(self, message, dimension=None):
        super().__init__(message)
        self.dimension = dimension

class PolarityError(BierKitError):
    # Raised if the origin is not strictly interior
    def __init__(self, message, facet=None):
        super().__init__(message)
        self.facet = facet

class AmbientMismatchError(BierKitError):
    def __init__(self, message):
        super().__init__(message)

class NonGenericThresholdError(ValidationError):
    """Some face has measure exactly equal to the threshold."""
    def __init__(self, message, face=None):
        super().__init__(message, value=face)
        self.face = face

class UnsupportedRealizationError(BierKitError):
    def __init__(self, message):
        super().__init__(message)

class PseudomanifoldError(BierKitError):
    """A ridge is not contained in exactly two maximal cones / facets."""
    def __init__(self, message, ridge=None):
        super().__init__(message)
        self.ridge = ridge

class DegenerateWallError(BierKitError):
    # Swing coefficients sum to zero, the normalization α(r)+α(r′)=2 is impossible
    def __init__(self, message, ridge=None):
        super().__init__(message)
        self.ridge = ridge

class CoarseningError(BierKitError):
    def __init__(self, message, cone=None):
        super().__init__(message)
        self.cone = cone

class PreconditionError(BierKitError):
    def __init__(self, message):
        super().__init__(message)

class InconsistentDeformationConeError(BierKitError):
    """The essential deformation cone came out with dimension < 1."""
    def __init__(self, message, essential_dim=None):
        super().__init__(message)
        self.essential_dim = essential_dim

class LPError(BierKitError):
    def __init__(self, message, status=None):
        super().__init__(message)
        self.status = status

class ConfigError(BierKitError):
    def __init__(self, message, path=None):
        super().__init__(message)
        self.path = path

class DependencyValidationError(BierKitError):
    # Raised if a required dependency is missing
    def __init__(self, message, dependency=None):
        super().__init__(message)
        self.dependency = dependency

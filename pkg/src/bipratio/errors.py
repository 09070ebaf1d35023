"""Exception types shared across the package."""


class BipratioError(Exception):
    """Base class for errors raised by this library."""


class GraphFormatError(BipratioError):
    """An edge-list or vertex-weight file violates the text format."""


class ZeroVectorError(BipratioError):
    """A sign vector that must be nonzero was all zeros."""


class EmptySelectionError(BipratioError):
    """The selected vertex sets L and R are both empty."""


class SaturatingFlowError(BipratioError):
    """A cut below the source capacity was requested but the flow saturates."""


class MalformedPathError(BipratioError):
    """A flow path does not run from a source-side to a sink-side vertex."""


class DegreeOverflowError(BipratioError):
    """A demand graph degree exceeds twice the vertex weight."""


class TooLargeError(BipratioError):
    """The instance is beyond the size limit of a brute-force oracle."""


class EmptyGraphError(BipratioError):
    """The operation needs at least one edge."""


class NumericalFailure(BipratioError):
    """The dense symmetric eigensolver did not converge."""


class RoundFail(BipratioError):
    """Gaussian rounding was rejected more than the attempt cap allows."""


class GameFailed(BipratioError):
    """The round restart budget was exhausted."""

"""Exception hierarchy for the colorcomplex package."""


class ColorComplexError(Exception):
    """Base class for every error raised by this package."""


class TriangulationError(ColorComplexError, ValueError):
    """A rotation system does not describe a valid surface triangulation."""


class NotSimple(TriangulationError):
    pass


class AsymmetricAdjacency(TriangulationError):
    pass


class NonTriangularFace(TriangulationError):
    pass


class TooSmall(TriangulationError):
    pass


class NotConnected(TriangulationError):
    pass


class PlanarCodeError(ColorComplexError, ValueError):
    """Malformed planar_code input.  ``offset`` is the byte position of the problem."""

    def __init__(self, message, offset=None):
        if offset is not None:
            message = f"{message} (at byte offset {offset})"
        super().__init__(message)
        self.offset = offset


class TruncatedStream(PlanarCodeError):
    pass


class BadHeader(PlanarCodeError):
    pass


class NeighborOutOfRange(PlanarCodeError):
    pass


class SameClass(ColorComplexError, ValueError):
    pass


class UnknownChain(ColorComplexError, IndexError):
    pass


class NotPlanar(ColorComplexError, ValueError):
    pass


class NoColorings(ColorComplexError):
    """The graph has no 4-coloring using all four colors."""


class MixedParityComponent(ColorComplexError, AssertionError):
    pass


class DegenerateIdentification(ColorComplexError, ValueError):
    pass


class NonFlippable(ColorComplexError, ValueError):
    pass


class OutOfRange(ColorComplexError, ValueError):
    pass


class UnknownName(ColorComplexError, KeyError):
    pass


class TorusTooSmall(ColorComplexError, ValueError):
    pass

"""Exception taxonomy shared by all modules."""


class GraphError(Exception):
    """Base class for every error raised by this package."""


class SelfLoopError(GraphError):
    """An edge joins a vertex to itself."""


class VertexOutOfRangeError(GraphError):
    """A vertex index falls outside 0..n-1."""


class DisconnectedError(GraphError):
    """A distance-based operation received a disconnected graph."""


class TooSmallError(GraphError):
    """The Mycielskian needs at least 2 vertices and 1 edge to be connected."""


class MatrixMismatchError(GraphError):
    """A distance matrix does not belong to the graph it was paired with."""


class NoEdgesError(GraphError):
    """A degree-based index is undefined on an edgeless graph."""


class DiameterNotTwoError(GraphError):
    """The closed-form degree distance requires diameter exactly 2."""

    def __init__(self, diameter: int):
        self.diameter = diameter
        super().__init__(f"graph has diameter {diameter}, the identity requires 2")


class InvalidParameterError(GraphError):
    """A generator parameter violates its family's minimum requirements."""


class TooLargeError(GraphError):
    """Exhaustive enumeration is capped at 6 vertices."""


class EdgeListParseError(GraphError):
    """Malformed edge-list text."""

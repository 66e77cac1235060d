"""Exception hierarchy for rotsys.

Graph construction problems, misuse of operations and enumeration limits
each get their own class so callers can react precisely; every message
names the offending vertex, dart or pair.
"""


class RotsysError(Exception):
    """Base class for all rotsys errors."""


class GraphInputError(RotsysError):
    """Base class for invalid embedding / graph construction input."""


class BadVertexId(GraphInputError):
    """A vertex id is not an integer in 0..n-1, or a label is missing."""


class LoopEdge(GraphInputError):
    """A vertex lists itself as a neighbor (loops are rejected)."""


class DuplicateNeighbor(GraphInputError):
    """A neighbor appears twice in one rotation (multi-edges are rejected)."""


class AsymmetricAdjacency(GraphInputError):
    """u lists v but v does not list u."""


class Disconnected(GraphInputError):
    """The underlying graph is not connected."""


class UnknownDart(RotsysError):
    """A dart does not belong to the embedding it was used with."""


class DifferentTails(RotsysError):
    """Darts passed to an angle/crossing query do not share a tail."""


class SharedDart(RotsysError):
    """The two dart pairs of a crossing query are not four distinct darts."""


class SameFace(RotsysError):
    """A face was intersected with itself."""


class UnderlyingMismatch(RotsysError):
    """Two embeddings do not have the same labeled underlying graph."""


class LowDegree(RotsysError):
    """Vertex type is undefined at degree <= 2 (order equals reversed order)."""


class EquivalentInput(RotsysError):
    """Witness extraction was asked for two equivalent embeddings."""


class PreconditionFailed(RotsysError):
    """A witness precondition on the reference embedding does not hold.

    ``reason`` is one of the REASON_* constants below.
    """

    def __init__(self, reason: str, message: str = ""):
        self.reason = reason
        super().__init__(message or reason)


REASON_NOT_PLANE = "NotPlane"
REASON_NOT_POLYHEDRAL_REF = "NotPolyhedralRef"
REASON_NOT_3_CONNECTED = "Not3Connected"
REASON_UNDERLYING_MISMATCH = "UnderlyingMismatch"


class TooLarge(RotsysError):
    """The rotation-system space exceeds the enumeration budget."""


class NotCubic(RotsysError):
    """The graph is not 3-regular."""


class NotPlanar(RotsysError):
    """No rotation system of the graph has genus 0."""


class Not3Connected(RotsysError):
    """The graph is not 3-connected."""


class Is3Connected(RotsysError):
    """The low-connectivity verifier was given a 3-connected graph."""


class ParseError(RotsysError):
    """Malformed input file; carries a 1-based line number where known."""

    def __init__(self, message: str, line: int | None = None):
        self.line = line
        if line is not None:
            message = f"line {line}: {message}"
        super().__init__(message)


class InvariantViolation(RotsysError):
    """An internal consistency check failed; always indicates a bug."""

"""Polyhedrality of an embedding and the dual multigraph.

An embedding is polyhedral when every facial walk is a simple cycle and
any two faces meet in nothing, a single vertex, or a single edge.  For
cubic embeddings this is equivalent to the dual graph being simple; the
two checks are implemented independently so the equivalence can be tested
rather than assumed.
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from functools import cached_property

from .embedmap import EmbeddedGraph, FaceWalk, trace_faces
from .errors import SameFace


class IntersectionTag(Enum):
    EMPTY = "Empty"
    ONE_VERTEX = "OneVertex"
    ONE_EDGE = "OneEdge"
    VIOLATION = "Violation"


@dataclass(frozen=True)
class IntersectionKind:
    """Classified intersection of two faces' vertex and edge sets."""

    tag: IntersectionTag
    shared_vertices: frozenset
    shared_edges: frozenset

    @property
    def vertex(self) -> int:
        """The shared vertex (ONE_VERTEX only)."""
        (v,) = self.shared_vertices
        return v

    @property
    def edge(self) -> tuple:
        """The shared edge as a sorted pair (ONE_EDGE only)."""
        (e,) = self.shared_edges
        return e


def is_simple_face(w: FaceWalk) -> bool:
    """True iff the walk is a simple cycle.

    No vertex may repeat along the walk, and the walk must have length at
    least 3; the length-2 walk around a single edge reuses that edge and
    is not a cycle.
    """
    return len(w) >= 3 and len(w.vertex_set) == len(w)


def face_intersection(f1: FaceWalk, f2: FaceWalk) -> IntersectionKind:
    """Classify the intersection of two distinct faces of one embedding."""
    if f1 == f2:
        raise SameFace("cannot intersect a face with itself")
    shared_v = f1.vertex_set & f2.vertex_set
    shared_e = f1.edge_set & f2.edge_set
    if not shared_v:
        tag = IntersectionTag.EMPTY
    elif len(shared_v) == 1:
        tag = IntersectionTag.ONE_VERTEX
    elif len(shared_v) == 2 and len(shared_e) == 1 and shared_v == set(next(iter(shared_e))):
        tag = IntersectionTag.ONE_EDGE
    else:
        tag = IntersectionTag.VIOLATION
    return IntersectionKind(tag, frozenset(shared_v), frozenset(shared_e))


@dataclass(frozen=True)
class NonSimpleFace:
    """A facial walk that is not a simple cycle."""

    face: FaceWalk


@dataclass(frozen=True)
class BadPair:
    """A face pair whose intersection is more than a vertex or an edge."""

    faces: tuple  # (i, j) indices into the canonical face list, i < j
    kind: IntersectionKind


@dataclass(frozen=True)
class PolyhedralVerdict:
    polyhedral: bool
    violation: NonSimpleFace | BadPair | None = None


def check_polyhedral(g: EmbeddedGraph) -> PolyhedralVerdict:
    """Decide polyhedrality; report the first violation in face order.

    Faces are scanned in canonical order for simplicity first, then all
    unordered face pairs (i, j), i < j, in lexicographic order.
    """
    faces = trace_faces(g)
    for w in faces:
        if not is_simple_face(w):
            return PolyhedralVerdict(False, NonSimpleFace(w))
    for i in range(len(faces)):
        for j in range(i + 1, len(faces)):
            kind = face_intersection(faces[i], faces[j])
            if kind.tag is IntersectionTag.VIOLATION:
                return PolyhedralVerdict(False, BadPair((i, j), kind))
    return PolyhedralVerdict(True)


@dataclass(frozen=True)
class DualGraph:
    """The dual multigraph: one vertex per face, one edge per graph edge.

    ``edges`` holds one sorted face-index pair per underlying edge; an
    edge bordering the same face on both sides appears as a loop (i, i).
    """

    num_vertices: int
    edges: tuple

    @cached_property
    def loop_count(self) -> int:
        return sum(1 for a, b in self.edges if a == b)

    @cached_property
    def parallel_edge_count(self) -> int:
        """Number of non-loop edges lying in a bundle of 2 or more."""
        mult = Counter((a, b) for a, b in self.edges if a != b)
        return sum(c for c in mult.values() if c >= 2)

    @property
    def is_simple(self) -> bool:
        return self.loop_count == 0 and self.parallel_edge_count == 0


def build_dual(g: EmbeddedGraph) -> DualGraph:
    """Build the dual multigraph from the face incidence of every edge."""
    faces = trace_faces(g)
    side = {}
    for i, w in enumerate(faces):
        for d in w:
            side[d] = i
    edges = []
    for v, rot in enumerate(g.rotations):
        for u in rot:
            if v < u:
                a = side[(v, u)]
                b = side[(u, v)]
                edges.append((a, b) if a <= b else (b, a))
    edges.sort()
    return DualGraph(len(faces), tuple(edges))


def dual_is_simple(g: EmbeddedGraph) -> bool:
    """True iff the dual has no loops and no parallel edges."""
    return build_dual(g).is_simple

"""Non-polyhedrality certificates for non-canonical embeddings.

Given a plane, polyhedral, 3-connected reference embedding and any
non-equivalent candidate embedding of the same labeled graph, this module
produces a concrete, independently checkable violation of polyhedrality
in the candidate: either a facial walk that is not a simple cycle, or a
pair of faces that intersect in more than a single vertex or edge.

The construction mirrors the crossing-curve argument: it locates either a
vertex whose candidate rotation matches neither the reference nor its
mirror (and exhibits two candidate angles there that interleave in the
reference rotation), or an edge joining a reference-oriented vertex to a
mirror-oriented one.  The two candidate faces anchored at that spot are
forced to intersect badly.
"""

from dataclasses import dataclass

from .compare import (
    TYPE_MIRROR,
    TYPE_NEITHER,
    TYPE_SAME,
    classify_types,
    equivalent,
    same_underlying,
)
from .embedmap import Dart, EmbeddedGraph, FaceWalk, genus, next_dart, trace_faces
from .errors import (
    DifferentTails,
    EquivalentInput,
    InvariantViolation,
    PreconditionFailed,
    REASON_NOT_3_CONNECTED,
    REASON_NOT_PLANE,
    REASON_NOT_POLYHEDRAL_REF,
    REASON_UNDERLYING_MISMATCH,
    SharedDart,
)
from .graphs import SimpleGraph, is_three_connected
from .polyhedral import (
    IntersectionKind,
    IntersectionTag,
    NonSimpleFace,
    check_polyhedral,
    face_intersection,
    is_simple_face,
)


@dataclass(frozen=True)
class Type2Vertex:
    """Anchor at a vertex typed 2: two candidate angles, none of them an
    angle of the reference, interleaving in the reference rotation.

    Each angle is stored as an ordered dart pair (a, b) with b following a
    in the candidate rotation.
    """

    vertex: int
    first_angle: tuple
    second_angle: tuple


@dataclass(frozen=True)
class MixedEdge:
    """Anchor at an edge from a type +1 vertex (tail) to a type -1 vertex."""

    edge: Dart


ProofAnchor = Type2Vertex | MixedEdge


@dataclass(frozen=True)
class CrossingPair:
    """Two candidate faces whose intersection violates polyhedrality."""

    face_a: FaceWalk
    face_b: FaceWalk
    kind: IntersectionKind


@dataclass(frozen=True)
class Witness:
    anchor: ProofAnchor
    certificate: NonSimpleFace | CrossingPair


def crossing_at_vertex(gref: EmbeddedGraph, p1, p2) -> bool:
    """True iff the dart pairs p1 and p2 interleave around their tail.

    All four darts must be distinct and share one tail v; the pairs
    interleave when, reading the cyclic rotation at v in gref, the members
    of p1 separate the members of p2.
    """
    a1, a2 = p1
    b1, b2 = p2
    darts = (a1, a2, b1, b2)
    tails = {d.tail for d in darts}
    if len(tails) != 1:
        raise DifferentTails(f"darts {darts} do not share a tail")
    if len(set(darts)) != 4:
        raise SharedDart(f"dart pairs {p1} and {p2} share a dart")
    v = a1.tail
    rot = gref.rotations[v]
    labels = [None] * len(rot)
    for i, u in enumerate(rot):
        d = Dart(v, u)
        if d in (a1, a2):
            labels[i] = "a"
        elif d in (b1, b2):
            labels[i] = "b"
    pattern = [x for x in labels if x is not None]
    if len(pattern) != 4:
        raise SharedDart(f"dart pairs {p1} and {p2} are not all incident to {v} in gref")
    # interleaved iff the cyclic pattern alternates: abab or baba
    return pattern[0] != pattern[1] and pattern[1] != pattern[2]


def _check_preconditions(gref: EmbeddedGraph, gcand: EmbeddedGraph) -> None:
    if not same_underlying(gref, gcand):
        raise PreconditionFailed(
            REASON_UNDERLYING_MISMATCH,
            "reference and candidate have different underlying labeled graphs",
        )
    if genus(gref) != 0:
        raise PreconditionFailed(REASON_NOT_PLANE, "reference embedding is not plane")
    if not is_three_connected(SimpleGraph.from_embedding(gref)):
        raise PreconditionFailed(
            REASON_NOT_3_CONNECTED, "underlying graph is not 3-connected"
        )
    if not check_polyhedral(gref).polyhedral:
        raise PreconditionFailed(
            REASON_NOT_POLYHEDRAL_REF, "reference embedding is not polyhedral"
        )
    if equivalent(gref, gcand):
        raise EquivalentInput("candidate is equivalent to the reference embedding")


def find_proof_anchor(gref: EmbeddedGraph, gcand: EmbeddedGraph) -> ProofAnchor:
    """Locate the anchor of the crossing argument for a distinct candidate.

    Returns a Type2Vertex for the smallest vertex typed 2 if one exists,
    otherwise a MixedEdge for the lexicographically smallest edge whose
    endpoints are typed (+1, -1).  Selection is deterministic.
    """
    _check_preconditions(gref, gcand)
    assignment = classify_types(gref, gcand)
    type2 = sorted(v for v, t in assignment.types.items() if t == TYPE_NEITHER)
    if type2:
        return _type2_anchor(gref, gcand, type2[0])
    mixed = sorted(
        Dart(v, u)
        for v, rot in enumerate(gcand.rotations)
        if assignment.types[v] == TYPE_SAME
        for u in rot
        if assignment.types[u] == TYPE_MIRROR
    )
    if not mixed:
        raise InvariantViolation("distinct candidate with neither type-2 vertex nor mixed edge")
    return MixedEdge(mixed[0])


def _type2_anchor(gref: EmbeddedGraph, gcand: EmbeddedGraph, v: int) -> Type2Vertex:
    """Run the angle construction at a type-2 vertex v.

    Writes the candidate rotation at v as e_0, ..., e_{d-1} (indices mod d)
    and picks a consecutive candidate pair {e_0, e_1} that is not an angle
    of the reference, re-anchoring at the first mismatch of the successor
    scan if the initial pair happens to be one.  Reading the reference
    rotation from e_0 in the direction that puts e_{d-1} behind e_1, the
    candidate indices in front of e_1 peak at y; {e_y, e_{y+1}} is then a
    second candidate angle, again no reference angle, and the two pairs
    interleave in the reference rotation.
    """
    cand = [Dart(v, u) for u in gcand.rotations[v]]
    d = len(cand)

    shift = 0
    if _ref_angle(gref, cand[0], cand[1]):
        direction = +1 if next_dart(gref, cand[0]) == cand[1] else -1
        shift = None
        for j in range(1, d):
            if _ref_next(gref, cand[j], direction) != cand[(j + 1) % d]:
                shift = j
                break
        if shift is None:
            raise InvariantViolation(f"vertex {v} typed 2 but rotations agree")
    e = cand[shift:] + cand[:shift]

    if _ref_angle(gref, e[0], e[1]):
        raise InvariantViolation(f"re-anchored pair at vertex {v} is still a reference angle")

    blocks = _ref_blocks(gref, e, d)
    cand_index = {dart: k for k, dart in enumerate(e)}
    y = max(cand_index[x] for x in blocks)
    first = (e[0], e[1])
    second = (e[y], e[(y + 1) % d])

    anchor = Type2Vertex(v, first, second)
    _assert_type2_anchor(gref, gcand, anchor)
    return anchor


def _ref_next(g: EmbeddedGraph, dart: Dart, direction: int) -> Dart:
    """Successor of dart around its tail, read forward or backward."""
    if direction == +1:
        return next_dart(g, dart)
    rot = g.rotations[dart.tail]
    i = rot.index(dart.head)
    return Dart(dart.tail, rot[i - 1])


def _ref_angle(g: EmbeddedGraph, a: Dart, b: Dart) -> bool:
    return next_dart(g, a) == b or next_dart(g, b) == a


def _ref_blocks(gref: EmbeddedGraph, e: list, d: int) -> list:
    """Candidate darts strictly between e_0 and e_1 in the reference order.

    The reference rotation at the vertex is read from e_0 in the direction
    that places e_{d-1} after e_1; the returned block is then nonempty and
    e_{d-1} is not in it.
    """
    for direction in (+1, -1):
        seq = [e[0]]
        cur = e[0]
        for _ in range(d - 1):
            cur = _ref_next(gref, cur, direction)
            seq.append(cur)
        p = seq.index(e[1])
        before, after = seq[1:p], seq[p + 1:]
        if e[d - 1] in after:
            if not before:
                raise InvariantViolation("empty leading block for a non-angle pair")
            return before
    raise InvariantViolation("candidate predecessor dart found in neither reading direction")


def _assert_type2_anchor(gref: EmbeddedGraph, gcand: EmbeddedGraph, a: Type2Vertex) -> None:
    for pair in (a.first_angle, a.second_angle):
        if next_dart(gcand, pair[0]) != pair[1]:
            raise InvariantViolation(f"{pair} is not a candidate angle at {a.vertex}")
        if _ref_angle(gref, pair[0], pair[1]):
            raise InvariantViolation(f"{pair} is an angle of the reference at {a.vertex}")
    if not crossing_at_vertex(gref, a.first_angle, a.second_angle):
        raise InvariantViolation(f"anchor angles at {a.vertex} do not interleave in the reference")


def extract_witness(gref: EmbeddedGraph, gcand: EmbeddedGraph) -> Witness:
    """Produce a verified polyhedrality-violation certificate for gcand.

    A candidate with a non-simple face yields that face directly (first in
    canonical order).  Otherwise the two candidate faces through the
    anchor's angles (or through the mixed edge's two darts) are returned
    together with their classified intersection, which must violate the
    single-vertex-or-edge rule.  The certificate is re-verified before it
    is returned; failure to verify is reported as a bug, never returned.
    """
    anchor = find_proof_anchor(gref, gcand)
    faces = trace_faces(gcand)
    for w in faces:
        if not is_simple_face(w):
            return Witness(anchor, NonSimpleFace(w))

    side = {}
    for w in faces:
        for dart in w:
            side[dart] = w
    if isinstance(anchor, Type2Vertex):
        face_a = side[anchor.first_angle[1]]
        face_b = side[anchor.second_angle[1]]
    else:
        face_a = side[anchor.edge]
        face_b = side[anchor.edge.inverse]

    if face_a == face_b:
        raise InvariantViolation("anchor faces coincide although all faces are simple")
    kind = face_intersection(face_a, face_b)
    if kind.tag is not IntersectionTag.VIOLATION:
        raise InvariantViolation(
            f"anchor faces intersect as {kind.tag.value}, not a violation"
        )
    return Witness(anchor, CrossingPair(face_a, face_b, kind))

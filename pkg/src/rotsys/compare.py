"""Embedding comparison: per-vertex types and equivalence up to mirror.

Relative to a reference embedding, a vertex of a candidate embedding gets
type +1 when its cyclic neighbor order matches the reference, -1 when it
matches the reversed order, and 2 otherwise.  Types need degree >= 3:
below that the order and its reversal coincide.
"""

from dataclasses import dataclass
from enum import Enum

from .embedmap import EmbeddedGraph
from .errors import InvariantViolation, LowDegree, UnderlyingMismatch

TYPE_SAME = 1
TYPE_MIRROR = -1
TYPE_NEITHER = 2


class Relation(Enum):
    EQUAL = "Equal"
    MIRROR = "Mirror"
    DISTINCT = "Distinct"


@dataclass(frozen=True)
class TypeAssignment:
    types: dict
    relation: Relation


def cyclic_equal(a, b) -> bool:
    """Equality of two sequences as cyclic sequences of distinct items."""
    if len(a) != len(b):
        return False
    if not a:
        return True
    try:
        k = b.index(a[0])
    except ValueError:
        return False
    n = len(a)
    return all(a[i] == b[(k + i) % n] for i in range(n))


def same_underlying(g1: EmbeddedGraph, g2: EmbeddedGraph) -> bool:
    return g1.n == g2.n and g1._adjacency == g2._adjacency


def _require_same_underlying(g1: EmbeddedGraph, g2: EmbeddedGraph) -> None:
    if not same_underlying(g1, g2):
        raise UnderlyingMismatch("embeddings have different underlying labeled graphs")


def vertex_type(gref: EmbeddedGraph, gcand: EmbeddedGraph, v: int) -> int:
    """Type of vertex v in gcand relative to gref: +1, -1 or 2."""
    _require_same_underlying(gref, gcand)
    ref = gref.rotations[v]
    if len(ref) <= 2:
        raise LowDegree(f"vertex {v} has degree {len(ref)}; types need degree >= 3")
    cand = gcand.rotations[v]
    if cyclic_equal(cand, ref):
        return TYPE_SAME
    if cyclic_equal(cand, tuple(reversed(ref))):
        return TYPE_MIRROR
    return TYPE_NEITHER


def classify_types(gref: EmbeddedGraph, gcand: EmbeddedGraph) -> TypeAssignment:
    """Full per-vertex type map plus the overall relation.

    Relation is Equal when every vertex has type +1, Mirror when every
    vertex has type -1, Distinct otherwise.  A Distinct assignment always
    contains a type-2 vertex or an edge joining a +1 and a -1 vertex; the
    observation is re-checked here and a failure reported as a bug.
    """
    _require_same_underlying(gref, gcand)
    types = {v: vertex_type(gref, gcand, v) for v in range(gref.n)}
    values = set(types.values())
    if values == {TYPE_SAME}:
        relation = Relation.EQUAL
    elif values == {TYPE_MIRROR}:
        relation = Relation.MIRROR
    else:
        relation = Relation.DISTINCT
        if TYPE_NEITHER not in values and not _has_mixed_edge(gcand, types):
            raise InvariantViolation(
                "distinct embeddings with all-agreeing vertices and no mixed edge"
            )
    return TypeAssignment(types, relation)


def _has_mixed_edge(g: EmbeddedGraph, types: dict) -> bool:
    for v, rot in enumerate(g.rotations):
        if types[v] != TYPE_SAME:
            continue
        if any(types[u] == TYPE_MIRROR for u in rot):
            return True
    return False


def equivalent(g1: EmbeddedGraph, g2: EmbeddedGraph) -> bool:
    """True iff g1 equals g2 or its mirror as rotation systems.

    Rotation systems are compared vertex-wise as cyclic sequences, so the
    stored starting points of the rotations do not matter.
    """
    _require_same_underlying(g1, g2)
    if all(cyclic_equal(r1, r2) for r1, r2 in zip(g1.rotations, g2.rotations)):
        return True
    return all(
        cyclic_equal(r1, tuple(reversed(r2)))
        for r1, r2 in zip(g1.rotations, g2.rotations)
    )

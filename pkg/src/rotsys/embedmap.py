"""Core combinatorial-map representation.

An embedding of a connected simple graph is stored as a rotation system:
for every vertex, a cyclic (clockwise) order of its neighbors.  Each
undirected edge {u, v} contributes the two darts (u, v) and (v, u); the
successor operator sends a dart to the next dart around its tail, and
faces are the orbits of ``dart -> successor(inverse(dart))``.
"""

from collections import namedtuple
from functools import cached_property
from typing import Iterator, Mapping, Sequence

from .errors import (
    AsymmetricAdjacency,
    BadVertexId,
    DifferentTails,
    Disconnected,
    DuplicateNeighbor,
    GraphInputError,
    InvariantViolation,
    LoopEdge,
    UnknownDart,
)


class Dart(namedtuple("Dart", ["tail", "head"])):
    """A directed edge; the two darts of an edge are each other's inverse."""

    __slots__ = ()

    def __new__(cls, tail: int, head: int) -> "Dart":
        if tail == head:
            raise LoopEdge(f"dart ({tail}, {head}) would be a loop")
        return super().__new__(cls, tail, head)

    @property
    def inverse(self) -> "Dart":
        return Dart(self.head, self.tail)

    def __repr__(self) -> str:
        return f"({self.tail},{self.head})"


def _as_dart(d) -> Dart:
    if isinstance(d, Dart):
        return d
    try:
        tail, head = d
    except (TypeError, ValueError):
        raise UnknownDart(f"{d!r} is not a dart") from None
    return Dart(tail, head)


class EmbeddedGraph:
    """A connected simple graph with a clockwise neighbor order per vertex.

    Immutable after construction; all derived data (successor map, faces,
    genus) is computed lazily and cached, so instances are safe to share
    across threads.
    """

    __slots__ = ("n", "rotations", "__dict__")

    def __init__(self, n: int, rotations):
        rotations = _normalize_rotation_input(n, rotations)
        _validate(n, rotations)
        self.n = n
        self.rotations = rotations

    @classmethod
    def _unchecked(cls, n: int, rotations: tuple) -> "EmbeddedGraph":
        # For internal callers that permute rotations of an already valid
        # embedding; skips the O(n + m) validation pass.
        g = object.__new__(cls)
        g.n = n
        g.rotations = rotations
        return g

    @cached_property
    def edge_count(self) -> int:
        return sum(len(r) for r in self.rotations) // 2

    def degree(self, v: int) -> int:
        return len(self.rotations[v])

    @cached_property
    def _adjacency(self) -> tuple:
        return tuple(frozenset(r) for r in self.rotations)

    def has_edge(self, u: int, v: int) -> bool:
        return 0 <= u < self.n and v in self._adjacency[u]

    @cached_property
    def _succ(self) -> dict:
        succ = {}
        for v, rot in enumerate(self.rotations):
            d = len(rot)
            for i, u in enumerate(rot):
                succ[Dart(v, u)] = Dart(v, rot[(i + 1) % d])
        return succ

    def darts(self) -> Iterator[Dart]:
        for v, rot in enumerate(self.rotations):
            for u in rot:
                yield Dart(v, u)

    def __eq__(self, other) -> bool:
        if not isinstance(other, EmbeddedGraph):
            return NotImplemented
        return self.n == other.n and self.rotations == other.rotations

    def __hash__(self) -> int:
        return hash((self.n, self.rotations))

    def __repr__(self) -> str:
        rots = "; ".join(
            f"{v}:({','.join(map(str, r))})" for v, r in enumerate(self.rotations)
        )
        return f"EmbeddedGraph(n={self.n}, {rots})"


def _normalize_rotation_input(n: int, rotations) -> tuple:
    if isinstance(rotations, Mapping):
        missing = [v for v in range(n) if v not in rotations]
        if missing:
            raise BadVertexId(f"no rotation given for vertex {missing[0]}")
        extra = [v for v in rotations if not (isinstance(v, int) and 0 <= v < n)]
        if extra:
            raise BadVertexId(f"rotation label {extra[0]!r} is not a vertex in 0..{n - 1}")
        seqs = [rotations[v] for v in range(n)]
    else:
        seqs = list(rotations)
        if len(seqs) != n:
            raise BadVertexId(f"expected {n} rotations, got {len(seqs)}")
    return tuple(tuple(r) for r in seqs)


def _validate(n: int, rotations: tuple) -> None:
    if n < 2:
        raise GraphInputError("an embedded graph needs at least 2 vertices (one edge)")
    for v, rot in enumerate(rotations):
        seen = set()
        for u in rot:
            if not isinstance(u, int) or isinstance(u, bool) or not 0 <= u < n:
                raise BadVertexId(f"vertex {v} lists invalid neighbor {u!r}")
            if u == v:
                raise LoopEdge(f"vertex {v} lists itself")
            if u in seen:
                raise DuplicateNeighbor(f"vertex {v} lists neighbor {u} twice")
            seen.add(u)
    adj = [set(rot) for rot in rotations]
    for v, nbrs in enumerate(adj):
        for u in nbrs:
            if v not in adj[u]:
                raise AsymmetricAdjacency(f"{v} lists {u} but {u} does not list {v}")
    # connectivity via BFS from vertex 0
    seen = {0}
    stack = [0]
    while stack:
        v = stack.pop()
        for u in adj[v]:
            if u not in seen:
                seen.add(u)
                stack.append(u)
    if len(seen) != n:
        missing = min(set(range(n)) - seen)
        raise Disconnected(f"vertex {missing} is not reachable from vertex 0")


def build_embedding(n: int, rotations) -> EmbeddedGraph:
    """Validate and build an embedding from per-vertex neighbor orders.

    ``rotations`` is a mapping vertex -> neighbor sequence or a sequence of
    n neighbor sequences.  Raises a GraphInputError subclass naming the
    offending vertex on loops, repeated neighbors, asymmetric adjacency,
    bad ids or disconnection.
    """
    return EmbeddedGraph(n, rotations)


def next_dart(g: EmbeddedGraph, d) -> Dart:
    """Successor of d in the clockwise order around its tail."""
    d = _as_dart(d)
    try:
        return g._succ[d]
    except KeyError:
        raise UnknownDart(f"dart {d} is not in the embedding") from None


class FaceWalk:
    """A facial walk: a cyclic dart sequence closed under the face rule.

    Stored rotated so the lexicographically smallest dart comes first,
    which makes equality and ordering of faces deterministic.
    """

    __slots__ = ("darts", "__dict__")

    def __init__(self, darts: Sequence[Dart]):
        darts = tuple(darts)
        if not darts:
            raise InvariantViolation("empty face walk")
        k = min(range(len(darts)), key=lambda i: darts[i])
        self.darts = darts[k:] + darts[:k]

    @cached_property
    def vertices(self) -> tuple:
        """Vertices in walk order (the tail of each dart)."""
        return tuple(d.tail for d in self.darts)

    @cached_property
    def vertex_set(self) -> frozenset:
        return frozenset(self.vertices)

    @cached_property
    def edge_set(self) -> frozenset:
        """Underlying undirected edges, as sorted (u, v) pairs."""
        return frozenset((d.tail, d.head) if d.tail < d.head else (d.head, d.tail)
                         for d in self.darts)

    def __len__(self) -> int:
        return len(self.darts)

    def __iter__(self) -> Iterator[Dart]:
        return iter(self.darts)

    def __contains__(self, d) -> bool:
        return d in self.darts

    def __eq__(self, other) -> bool:
        if not isinstance(other, FaceWalk):
            return NotImplemented
        return self.darts == other.darts

    def __hash__(self) -> int:
        return hash(self.darts)

    def __repr__(self) -> str:
        return "FaceWalk[" + " ".join(map(repr, self.darts)) + "]"


def trace_faces(g: EmbeddedGraph) -> tuple:
    """All facial walks of g, each canonicalized, sorted by first dart.

    The walks partition the dart universe: every dart lies on exactly one
    returned walk, and the walk lengths sum to 2|E|.  Cached per embedding.
    """
    faces = g.__dict__.get("_faces")
    if faces is None:
        faces = _trace_faces(g)
        g.__dict__["_faces"] = faces
    return faces


def _trace_faces(g: EmbeddedGraph) -> tuple:
    succ = g._succ
    visited = set()
    faces = []
    for start in sorted(succ):
        if start in visited:
            continue
        walk = []
        d = start
        while True:
            walk.append(d)
            visited.add(d)
            d = succ[d.inverse]
            if d == start:
                break
        faces.append(FaceWalk(walk))
    faces.sort(key=lambda f: f.darts[0])
    return tuple(faces)


def genus(g: EmbeddedGraph) -> int:
    """Genus of the embedded surface via the Euler formula.

    With v vertices, e edges and f faces the genus is (2 - (v - e + f)) / 2;
    the defect 2 - (v - e + f) is even and non-negative for every valid
    embedding, and a violation is reported as an internal bug.
    """
    f = len(trace_faces(g))
    defect = 2 - (g.n - g.edge_count + f)
    if defect < 0 or defect % 2:
        raise InvariantViolation(
            f"Euler defect {defect} for v={g.n}, e={g.edge_count}, f={f}"
        )
    return defect // 2


def mirror(g: EmbeddedGraph) -> EmbeddedGraph:
    """The mirror image: every rotation reversed.  An involution."""
    return EmbeddedGraph._unchecked(g.n, tuple(tuple(reversed(r)) for r in g.rotations))


def is_angle(g: EmbeddedGraph, a, b) -> bool:
    """True iff darts a and b are consecutive in the rotation at their tail.

    Consecutive in either reading direction, so an embedding and its mirror
    have the same angles.  Requires a.tail == b.tail and a != b.
    """
    a = _as_dart(a)
    b = _as_dart(b)
    if a.tail != b.tail:
        raise DifferentTails(f"darts {a} and {b} have different tails")
    if a == b:
        raise UnknownDart(f"angle query needs two distinct darts, got {a} twice")
    return next_dart(g, a) == b or next_dart(g, b) == a

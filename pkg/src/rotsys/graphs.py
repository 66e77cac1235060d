"""Abstract simple graphs: validation, predicates and a small zoo.

SimpleGraph is the labeled, order-free input to the enumeration layer;
neighbor lists are kept sorted so every embedding of a graph enumerates
in the same deterministic order regardless of how the graph was built.
"""

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .embedmap import EmbeddedGraph
from .errors import (
    AsymmetricAdjacency,
    BadVertexId,
    DuplicateNeighbor,
    GraphInputError,
    LoopEdge,
)


@dataclass(frozen=True)
class SimpleGraph:
    """A simple loop-free graph on vertices 0..n-1 with sorted adjacency."""

    n: int
    adj: tuple

    def __init__(self, n: int, adj):
        if n < 1:
            raise GraphInputError("a graph needs at least one vertex")
        adj = tuple(tuple(sorted(set(nbrs))) for nbrs in adj)
        if len(adj) != n:
            raise BadVertexId(f"expected {n} adjacency lists, got {len(adj)}")
        for v, nbrs in enumerate(adj):
            for u in nbrs:
                if not isinstance(u, int) or isinstance(u, bool) or not 0 <= u < n:
                    raise BadVertexId(f"vertex {v} lists invalid neighbor {u!r}")
                if u == v:
                    raise LoopEdge(f"vertex {v} lists itself")
                if v not in adj[u]:
                    raise AsymmetricAdjacency(f"{v} lists {u} but {u} does not list {v}")
        object.__setattr__(self, "n", n)
        object.__setattr__(self, "adj", adj)

    @classmethod
    def from_edges(cls, n: int, edges) -> "SimpleGraph":
        nbrs = [set() for _ in range(n)]
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise BadVertexId(f"edge ({u}, {v}) is out of range for n={n}")
            if u == v:
                raise LoopEdge(f"edge ({u}, {v}) is a loop")
            if v in nbrs[u]:
                raise DuplicateNeighbor(f"edge ({u}, {v}) given twice")
            nbrs[u].add(v)
            nbrs[v].add(u)
        return cls(n, nbrs)

    @classmethod
    def from_embedding(cls, g: EmbeddedGraph) -> "SimpleGraph":
        return cls(g.n, g.rotations)

    @cached_property
    def m(self) -> int:
        return sum(len(nbrs) for nbrs in self.adj) // 2

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    @cached_property
    def degrees(self) -> tuple:
        return tuple(len(nbrs) for nbrs in self.adj)

    @cached_property
    def edges(self) -> tuple:
        return tuple((v, u) for v in range(self.n) for u in self.adj[v] if v < u)

    def is_cubic(self) -> bool:
        return all(d == 3 for d in self.degrees)

    def is_connected(self) -> bool:
        return len(self._component_of(0, ())) == self.n

    def _component_of(self, start: int, removed: tuple) -> set:
        removed = set(removed)
        if start in removed:
            return set()
        seen = {start}
        stack = [start]
        while stack:
            v = stack.pop()
            for u in self.adj[v]:
                if u not in seen and u not in removed:
                    seen.add(u)
                    stack.append(u)
        return seen


def is_three_connected(graph: SimpleGraph) -> bool:
    """Brute-force 3-connectivity: n >= 4 and no disconnecting vertex pair."""
    if graph.n < 4 or not graph.is_connected():
        return False
    for pair in combinations(range(graph.n), 2):
        removed = set(pair)
        start = next(v for v in range(graph.n) if v not in removed)
        reached = graph._component_of(start, pair)
        if len(reached) != graph.n - 2:
            return False
    return True


# ---------------------------------------------------------------------------
# Named small graphs used throughout the test and verification suites.
# ---------------------------------------------------------------------------

def complete_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, combinations(range(n), 2))


def cycle_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def path_graph(n: int) -> SimpleGraph:
    return SimpleGraph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cube_graph() -> SimpleGraph:
    """Q3: vertices are 3-bit strings, edges flip one bit."""
    edges = [(v, v ^ (1 << b)) for v in range(8) for b in range(3) if v < v ^ (1 << b)]
    return SimpleGraph.from_edges(8, edges)


def prism_graph() -> SimpleGraph:
    """Triangular prism: two triangles 012 and 345 joined by a matching."""
    return SimpleGraph.from_edges(
        6, [(0, 1), (1, 2), (0, 2), (3, 4), (4, 5), (3, 5), (0, 3), (1, 4), (2, 5)]
    )


def octahedron_graph() -> SimpleGraph:
    """K_{2,2,2}: all pairs except the antipodes (0,5), (1,3), (2,4)."""
    non_edges = {(0, 5), (1, 3), (2, 4)}
    edges = [e for e in combinations(range(6), 2) if e not in non_edges]
    return SimpleGraph.from_edges(6, edges)


def wheel_graph(k: int) -> SimpleGraph:
    """Hub 0 joined to a k-cycle 1..k."""
    edges = [(0, i) for i in range(1, k + 1)]
    edges += [(i, i % k + 1) for i in range(1, k + 1)]
    return SimpleGraph.from_edges(k + 1, edges)


def petersen_graph() -> SimpleGraph:
    """Outer 5-cycle 0..4, inner pentagram 5..9, spokes i -- i+5."""
    edges = [(i, (i + 1) % 5) for i in range(5)]
    edges += [(i, i + 5) for i in range(5)]
    edges += [(5 + i, 5 + (i + 2) % 5) for i in range(5)]
    return SimpleGraph.from_edges(10, edges)


def bowtie_graph() -> SimpleGraph:
    """Two triangles sharing vertex 2."""
    return SimpleGraph.from_edges(5, [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)])


def k4_minus_edge() -> SimpleGraph:
    return SimpleGraph.from_edges(4, [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)])

"""Exhaustive enumeration of rotation systems and claim verifiers.

A connected simple graph on vertices of degree d_0, ..., d_{n-1} has
exactly prod (d_v - 1)! rotation systems; they are enumerated in a fixed
mixed-radix order (vertex 0 most significant, smallest neighbor pinned
first in every rotation).  On top of the enumeration sit a genus census,
planarity-by-search, and exhaustive verifiers for embedding uniqueness,
the cubic simple-dual claim and the low-connectivity claim.
"""

from collections import Counter
from dataclasses import dataclass
from enum import Enum
from itertools import permutations, product
from math import factorial
from typing import Iterator

import numpy as np

from ._kernels import FlatScanner
from .embedmap import EmbeddedGraph, mirror
from .errors import (
    Disconnected,
    GraphInputError,
    InvariantViolation,
    Is3Connected,
    Not3Connected,
    NotCubic,
    NotPlanar,
    TooLarge,
)
from .graphs import SimpleGraph, is_three_connected

DEFAULT_BUDGET = 10_000_000


def total_rotation_systems(graph: SimpleGraph) -> int:
    """prod over vertices of (degree - 1)!."""
    total = 1
    for d in graph.degrees:
        total *= factorial(max(d - 1, 0))
    return total


def _require_enumerable(graph: SimpleGraph, budget: int) -> int:
    if graph.n < 2:
        raise GraphInputError("enumeration needs a graph with at least one edge")
    if not graph.is_connected():
        raise Disconnected("enumeration requires a connected graph")
    total = total_rotation_systems(graph)
    if total > budget:
        raise TooLarge(f"{total} rotation systems exceed the budget of {budget}")
    return total


def _vertex_rotations(graph: SimpleGraph, v: int) -> tuple:
    nbrs = graph.adj[v]
    return tuple((nbrs[0],) + rest for rest in permutations(nbrs[1:]))


def enumerate_rotations(
    graph: SimpleGraph, budget: int = DEFAULT_BUDGET
) -> Iterator[EmbeddedGraph]:
    """Yield every rotation system of the graph exactly once, in order.

    Raises TooLarge up front when the space exceeds the budget.
    """
    _require_enumerable(graph, budget)
    per_vertex = [_vertex_rotations(graph, v) for v in range(graph.n)]

    def stream():
        for rotations in product(*per_vertex):
            yield EmbeddedGraph._unchecked(graph.n, rotations)

    return stream()


def _unrank_permutation(k: int, items: tuple) -> tuple:
    avail = list(items)
    out = []
    for pos in range(len(items)):
        f = factorial(len(items) - 1 - pos)
        q, k = divmod(k, f)
        out.append(avail.pop(q))
    return tuple(out)


def embedding_at_index(graph: SimpleGraph, index: int) -> EmbeddedGraph:
    """The index-th rotation system in enumeration order."""
    if graph.n < 2 or not graph.is_connected():
        raise Disconnected("indexing requires a connected graph with an edge")
    total = total_rotation_systems(graph)
    if not 0 <= index < total:
        raise ValueError(f"index {index} outside 0..{total - 1}")
    digits = [0] * graph.n
    for v in range(graph.n - 1, -1, -1):
        index, digits[v] = divmod(index, factorial(max(graph.degree(v) - 1, 0)))
    rotations = tuple(
        (graph.adj[v][0],) + _unrank_permutation(digits[v], graph.adj[v][1:])
        for v in range(graph.n)
    )
    return EmbeddedGraph._unchecked(graph.n, rotations)


def _normalized_rotations(g: EmbeddedGraph) -> tuple:
    out = []
    for rot in g.rotations:
        k = rot.index(min(rot))
        out.append(rot[k:] + rot[:k])
    return tuple(out)


def canonical_key(g: EmbeddedGraph) -> bytes:
    """A key equal for g and mirror(g) and distinct between mirror classes."""
    a = repr((g.n, _normalized_rotations(g))).encode("ascii")
    b = repr((g.n, _normalized_rotations(mirror(g)))).encode("ascii")
    return min(a, b)


@dataclass(frozen=True)
class CensusReport:
    """Per-genus counts over all rotation systems of one graph."""

    graph_id: str
    total: int
    raw_by_genus: dict
    classes_by_genus: dict
    polyhedral_classes: int
    polyhedral_representatives: tuple


class Claim(Enum):
    WHITNEY_UNIQUE = "WhitneyUnique"
    CUBIC_SIMPLE_DUAL_PLANE_ONLY = "CubicSimpleDualPlaneOnly"
    NO_POLYHEDRAL_HIGHER_GENUS = "NoPolyhedralHigherGenus"
    NO_POLYHEDRAL_LOW_CONNECTIVITY = "NoPolyhedralLowConnectivity"


@dataclass(frozen=True)
class VerificationResult:
    claim: Claim
    passed: bool
    counterexample: EmbeddedGraph | None = None


def _scan_all(graph: SimpleGraph, budget: int):
    """Run the kernel over the full space; yield (base, genus, poly, dual)."""
    total = _require_enumerable(graph, budget)
    scanner = FlatScanner(graph)
    if scanner.total != total:
        raise InvariantViolation("scanner and formula disagree on the space size")
    return scanner.scan(0, total)


def genus_census(
    graph: SimpleGraph, graph_id: str | None = None, budget: int = DEFAULT_BUDGET
) -> CensusReport:
    """Count rotation systems by genus, raw and up to mirror.

    Mirroring pairs every system with a distinct partner of equal genus as
    soon as some vertex has degree >= 3; the only self-mirror graphs are
    paths and cycles, which have a single rotation system.  Polyhedral
    systems are collected explicitly and deduplicated per mirror class.
    """
    total = _require_enumerable(graph, budget)
    raw = Counter()
    poly_indices = []
    for base, gen, poly, _dual in _scan_all(graph, budget):
        values, counts = np.unique(gen, return_counts=True)
        for g_val, c in zip(values, counts):
            raw[int(g_val)] += int(c)
        for i in np.flatnonzero(poly):
            poly_indices.append(base + int(i))
    if sum(raw.values()) != total:
        raise InvariantViolation("raw genus counts do not sum to the space size")

    paired = max(graph.degrees) >= 3
    classes = {}
    for g_val in sorted(raw):
        count = raw[g_val]
        if paired:
            if count % 2:
                raise InvariantViolation(f"odd raw count {count} at genus {g_val}")
            classes[g_val] = count // 2
        else:
            classes[g_val] = count

    reps = []
    seen = set()
    for i in poly_indices:
        emb = embedding_at_index(graph, i)
        key = canonical_key(emb)
        if key not in seen:
            seen.add(key)
            reps.append(emb)
    if graph_id is None:
        graph_id = f"graph(n={graph.n}, m={graph.m})"
    return CensusReport(
        graph_id=graph_id,
        total=total,
        raw_by_genus={g_val: raw[g_val] for g_val in sorted(raw)},
        classes_by_genus=classes,
        polyhedral_classes=len(reps),
        polyhedral_representatives=tuple(reps),
    )


def find_planar_embedding(
    graph: SimpleGraph, budget: int = DEFAULT_BUDGET
) -> EmbeddedGraph | None:
    """First enumerated rotation system with genus 0, or None."""
    for base, gen, _poly, _dual in _scan_all(graph, budget):
        hits = np.flatnonzero(gen == 0)
        if hits.size:
            return embedding_at_index(graph, base + int(hits[0]))
    return None


def verify_whitney(graph: SimpleGraph, budget: int = DEFAULT_BUDGET) -> VerificationResult:
    """Exhaustively check uniqueness of the polyhedral embedding.

    For a 3-connected planar graph, passes iff exactly one mirror class of
    rotation systems is polyhedral and that class has genus 0.  On failure
    the counterexample is the offending system of smallest index.
    """
    if not is_three_connected(graph):
        raise Not3Connected("verify_whitney needs a 3-connected graph")
    polyhedral = []
    saw_plane = False
    for base, gen, poly, _dual in _scan_all(graph, budget):
        if not saw_plane and (gen == 0).any():
            saw_plane = True
        for i in np.flatnonzero(poly):
            polyhedral.append((base + int(i), int(gen[i])))
    if not saw_plane:
        raise NotPlanar("graph has no genus-0 rotation system")
    if not polyhedral:
        raise InvariantViolation("3-connected planar graph with no polyhedral system")
    first_key = canonical_key(embedding_at_index(graph, polyhedral[0][0]))
    for index, g_val in polyhedral:
        emb = embedding_at_index(graph, index)
        if g_val != 0 or canonical_key(emb) != first_key:
            return VerificationResult(Claim.WHITNEY_UNIQUE, False, emb)
    return VerificationResult(Claim.WHITNEY_UNIQUE, True)


def verify_cubic_corollary(
    graph: SimpleGraph, budget: int = DEFAULT_BUDGET
) -> VerificationResult:
    """Check that every simple-dual embedding of a cubic graph is plane.

    Dual simplicity is computed from the dual's edge structure, not from
    the polyhedrality predicate, so the two routes stay independent.
    """
    if not graph.is_cubic():
        raise NotCubic("verify_cubic_corollary needs a 3-regular graph")
    if not is_three_connected(graph):
        raise Not3Connected("verify_cubic_corollary needs a 3-connected graph")
    saw_plane = False
    counterexample = None
    for base, gen, _poly, dual in _scan_all(graph, budget):
        if not saw_plane and (gen == 0).any():
            saw_plane = True
        if counterexample is None:
            bad = np.flatnonzero((dual == 1) & (gen > 0))
            if bad.size:
                counterexample = base + int(bad[0])
    if not saw_plane:
        raise NotPlanar("graph has no genus-0 rotation system")
    if counterexample is None:
        return VerificationResult(Claim.CUBIC_SIMPLE_DUAL_PLANE_ONLY, True)
    return VerificationResult(
        Claim.CUBIC_SIMPLE_DUAL_PLANE_ONLY, False, embedding_at_index(graph, counterexample)
    )


def verify_low_connectivity(
    graph: SimpleGraph, budget: int = DEFAULT_BUDGET
) -> VerificationResult:
    """Check that a graph with a 1- or 2-cut has no polyhedral embedding."""
    if is_three_connected(graph):
        raise Is3Connected("graph is 3-connected; the low-connectivity claim does not apply")
    for base, _gen, poly, _dual in _scan_all(graph, budget):
        hits = np.flatnonzero(poly)
        if hits.size:
            emb = embedding_at_index(graph, base + int(hits[0]))
            return VerificationResult(Claim.NO_POLYHEDRAL_LOW_CONNECTIVITY, False, emb)
    return VerificationResult(Claim.NO_POLYHEDRAL_LOW_CONNECTIVITY, True)


def verify_planar_polyhedral(
    graph: SimpleGraph, budget: int = DEFAULT_BUDGET
) -> VerificationResult:
    """Check that no embedding of a planar graph is polyhedral off the plane."""
    saw_plane = False
    counterexample = None
    for base, gen, poly, _dual in _scan_all(graph, budget):
        if not saw_plane and (gen == 0).any():
            saw_plane = True
        if counterexample is None:
            bad = np.flatnonzero((poly == 1) & (gen > 0))
            if bad.size:
                counterexample = base + int(bad[0])
    if not saw_plane:
        raise NotPlanar("graph has no genus-0 rotation system")
    if counterexample is None:
        return VerificationResult(Claim.NO_POLYHEDRAL_HIGHER_GENUS, True)
    return VerificationResult(
        Claim.NO_POLYHEDRAL_HIGHER_GENUS, False, embedding_at_index(graph, counterexample)
    )

import random

import pytest

import rotsys as rs

K4P_ROTATIONS = {0: (1, 3, 2), 1: (2, 3, 0), 2: (0, 3, 1), 3: (0, 1, 2)}
K4F_ROTATIONS = {0: (1, 3, 2), 1: (2, 3, 0), 2: (0, 3, 1), 3: (0, 2, 1)}


@pytest.fixture
def k4p() -> rs.EmbeddedGraph:
    """The plane tetrahedron embedding used as the hand-checked reference."""
    return rs.build_embedding(4, K4P_ROTATIONS)


@pytest.fixture
def k4f() -> rs.EmbeddedGraph:
    """K4 with the rotation at vertex 3 reversed: genus 1, non-simple face."""
    return rs.build_embedding(4, K4F_ROTATIONS)


@pytest.fixture
def single_edge() -> rs.EmbeddedGraph:
    return rs.build_embedding(2, {0: (1,), 1: (0,)})


@pytest.fixture
def c4_embedding() -> rs.EmbeddedGraph:
    return rs.build_embedding(4, {0: (1, 3), 1: (2, 0), 2: (3, 1), 3: (0, 2)})


@pytest.fixture(scope="session")
def warm_kernel():
    """Compile the scan kernel once so timed tests exclude JIT time."""
    rs.genus_census(rs.complete_graph(4))


def random_embedding(rnd: random.Random, max_n: int = 7) -> rs.EmbeddedGraph:
    """A uniform-ish random connected simple embedding for property tests."""
    n = rnd.randint(2, max_n)
    edges = set()
    for v in range(1, n):
        edges.add((rnd.randrange(v), v))
    spare = [(u, v) for u in range(n) for v in range(u + 1, n) if (u, v) not in edges]
    rnd.shuffle(spare)
    edges.update(spare[: rnd.randint(0, len(spare))])
    nbrs = [[] for _ in range(n)]
    for u, v in sorted(edges):
        nbrs[u].append(v)
        nbrs[v].append(u)
    for lst in nbrs:
        rnd.shuffle(lst)
    return rs.build_embedding(n, nbrs)


def random_rotation_system(rnd: random.Random, graph: rs.SimpleGraph) -> rs.EmbeddedGraph:
    """A random rotation system of a fixed graph."""
    nbrs = [list(a) for a in graph.adj]
    for lst in nbrs:
        rnd.shuffle(lst)
    return rs.build_embedding(graph.n, nbrs)

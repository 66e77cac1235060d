import random

import pytest
from hypothesis import given, strategies as st

import rotsys as rs
from rotsys.errors import (
    AsymmetricAdjacency,
    BadVertexId,
    DifferentTails,
    Disconnected,
    DuplicateNeighbor,
    GraphInputError,
    LoopEdge,
    UnknownDart,
)

from conftest import random_embedding


embeddings = st.builds(
    lambda seed: random_embedding(random.Random(seed)),
    st.integers(0, 2**32 - 1),
)


class TestDart:
    def test_inverse_involution(self):
        d = rs.Dart(2, 5)
        assert d.inverse == rs.Dart(5, 2)
        assert d.inverse.inverse == d

    def test_loop_rejected(self):
        with pytest.raises(LoopEdge):
            rs.Dart(3, 3)

    def test_ordering_is_lexicographic(self):
        assert rs.Dart(0, 1) < rs.Dart(0, 2) < rs.Dart(1, 0)


class TestBuildEmbedding:
    def test_k4p_valid(self, k4p):
        assert k4p.n == 4
        assert k4p.edge_count == 6

    def test_single_edge_valid(self, single_edge):
        assert single_edge.edge_count == 1

    def test_duplicate_and_disconnected_input(self):
        with pytest.raises(DuplicateNeighbor):
            rs.build_embedding(3, {0: (1, 1), 1: (0, 0), 2: ()})

    def test_disconnected(self):
        with pytest.raises(Disconnected):
            rs.build_embedding(4, {0: (1,), 1: (0,), 2: (3,), 3: (2,)})

    def test_loop(self):
        with pytest.raises(LoopEdge):
            rs.build_embedding(2, {0: (0,), 1: ()})

    def test_asymmetric(self):
        with pytest.raises(AsymmetricAdjacency):
            rs.build_embedding(3, {0: (1, 2), 1: (0,), 2: ()})

    def test_bad_vertex_id(self):
        with pytest.raises(BadVertexId):
            rs.build_embedding(2, {0: (5,), 1: (0,)})
        with pytest.raises(BadVertexId):
            rs.build_embedding(3, {0: (1,), 1: (0,)})

    def test_too_small(self):
        with pytest.raises(GraphInputError):
            rs.build_embedding(1, {0: ()})

    def test_accepts_sequence_input(self, k4p):
        g = rs.build_embedding(4, [(1, 3, 2), (2, 3, 0), (0, 3, 1), (0, 1, 2)])
        assert g == k4p


class TestNextDart:
    def test_successor(self, k4p):
        assert rs.next_dart(k4p, rs.Dart(0, 1)) == rs.Dart(0, 3)

    def test_cyclic_wrap(self, k4p):
        assert rs.next_dart(k4p, rs.Dart(0, 2)) == rs.Dart(0, 1)

    def test_degree_one_fixed_point(self, single_edge):
        assert rs.next_dart(single_edge, rs.Dart(0, 1)) == rs.Dart(0, 1)

    def test_unknown_dart(self, k4p):
        with pytest.raises(UnknownDart):
            rs.next_dart(k4p, rs.Dart(0, 4))


class TestTraceFaces:
    def test_k4p_four_triangles(self, k4p):
        faces = rs.trace_faces(k4p)
        assert [len(f) for f in faces] == [3, 3, 3, 3]
        assert {f.vertex_set for f in faces} == {
            frozenset(s) for s in [(0, 1, 2), (0, 3, 1), (1, 3, 2), (0, 2, 3)]
        }

    def test_k4f_two_faces(self, k4f):
        faces = rs.trace_faces(k4f)
        assert sorted(len(f) for f in faces) == [3, 9]
        big = max(faces, key=len)
        assert big.vertices.count(3) == 3

    def test_single_edge_one_face(self, single_edge):
        (face,) = rs.trace_faces(single_edge)
        assert len(face) == 2

    def test_canonical_order(self, k4p):
        faces = rs.trace_faces(k4p)
        starts = [f.darts[0] for f in faces]
        assert starts == sorted(starts)
        for f in faces:
            assert f.darts[0] == min(f.darts)

    def test_closure_rule(self, k4p, k4f):
        for g in (k4p, k4f):
            for face in rs.trace_faces(g):
                n = len(face)
                for i, d in enumerate(face.darts):
                    assert rs.next_dart(g, d.inverse) == face.darts[(i + 1) % n]


class TestGenus:
    def test_values(self, k4p, k4f, single_edge):
        assert rs.genus(k4p) == 0
        assert rs.genus(k4f) == 1
        assert rs.genus(single_edge) == 0

    def test_mirror_of_twisted(self, k4f):
        assert rs.genus(rs.mirror(k4f)) == 1


class TestMirror:
    def test_k4p_reversed_rotations(self, k4p):
        assert rs.mirror(k4p).rotations == ((2, 3, 1), (0, 3, 2), (1, 3, 0), (2, 1, 0))

    def test_involution(self, k4p, k4f):
        assert rs.mirror(rs.mirror(k4p)) == k4p
        assert rs.mirror(rs.mirror(k4f)) == k4f


class TestIsAngle:
    def test_consecutive(self, k4p):
        assert rs.is_angle(k4p, rs.Dart(0, 1), rs.Dart(0, 3))

    def test_non_consecutive_degree_four(self):
        g = rs.find_planar_embedding(rs.wheel_graph(4))
        hub = g.rotations[0]
        assert not rs.is_angle(g, rs.Dart(0, hub[0]), rs.Dart(0, hub[2]))
        assert rs.is_angle(g, rs.Dart(0, hub[1]), rs.Dart(0, hub[2]))

    def test_degree_three_all_pairs(self, k4p):
        darts = [rs.Dart(0, u) for u in k4p.rotations[0]]
        for i in range(3):
            for j in range(i + 1, 3):
                assert rs.is_angle(k4p, darts[i], darts[j])

    def test_different_tails(self, k4p):
        with pytest.raises(DifferentTails):
            rs.is_angle(k4p, rs.Dart(0, 1), rs.Dart(1, 2))

    def test_mirror_shares_angles(self, k4p):
        m = rs.mirror(k4p)
        for v, rot in enumerate(k4p.rotations):
            d = len(rot)
            for i in range(d):
                for j in range(i + 1, d):
                    a, b = rs.Dart(v, rot[i]), rs.Dart(v, rot[j])
                    assert rs.is_angle(k4p, a, b) == rs.is_angle(m, a, b)


class TestProperties:
    @given(embeddings)
    def test_faces_partition_darts(self, g):
        faces = rs.trace_faces(g)
        all_darts = [d for f in faces for d in f]
        assert len(all_darts) == 2 * g.edge_count
        assert len(set(all_darts)) == len(all_darts)
        assert set(all_darts) == set(g.darts())

    @given(embeddings)
    def test_successor_is_a_bijection(self, g):
        succ = [rs.next_dart(g, d) for d in g.darts()]
        assert set(succ) == set(g.darts())

    @given(embeddings)
    def test_mirror_involution_and_genus(self, g):
        m = rs.mirror(g)
        assert rs.mirror(m) == g
        assert rs.genus(m) == rs.genus(g)

    @given(embeddings)
    def test_mirror_faces_are_reversed_walks(self, g):
        originals = set(rs.trace_faces(g))
        for face in rs.trace_faces(rs.mirror(g)):
            reversed_walk = rs.FaceWalk([d.inverse for d in reversed(face.darts)])
            assert reversed_walk in originals

        def edge_multiset(h):
            return sorted(tuple(sorted(f.edge_set)) for f in rs.trace_faces(h))

        assert edge_multiset(g) == edge_multiset(rs.mirror(g))

    @given(embeddings)
    def test_euler_defect_even_nonnegative(self, g):
        f = len(rs.trace_faces(g))
        defect = 2 - (g.n - g.edge_count + f)
        assert defect >= 0 and defect % 2 == 0
        assert rs.genus(g) == defect // 2

    @given(embeddings)
    def test_low_degree_rotations_mirror_identical(self, g):
        from rotsys.compare import cyclic_equal

        m = rs.mirror(g)
        for v in range(g.n):
            if g.degree(v) <= 2:
                assert cyclic_equal(g.rotations[v], m.rotations[v])

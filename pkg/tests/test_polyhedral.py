import random

import pytest
from hypothesis import given, strategies as st

import rotsys as rs
from rotsys.errors import SameFace
from rotsys.polyhedral import BadPair, NonSimpleFace

from conftest import random_embedding, random_rotation_system


embeddings = st.builds(
    lambda seed: random_embedding(random.Random(seed)),
    st.integers(0, 2**32 - 1),
)

CUBIC_GRAPHS = [rs.complete_graph(4), rs.prism_graph(), rs.cube_graph(), rs.petersen_graph()]

cubic_embeddings = st.builds(
    lambda seed, i: random_rotation_system(random.Random(seed), CUBIC_GRAPHS[i]),
    st.integers(0, 2**32 - 1),
    st.integers(0, len(CUBIC_GRAPHS) - 1),
)


def faces_by_vertices(g, *vertex_sets):
    faces = rs.trace_faces(g)
    picked = []
    for vs in vertex_sets:
        (match,) = [f for f in faces if f.vertex_set == frozenset(vs)]
        picked.append(match)
    return picked


class TestIsSimpleFace:
    def test_triangle_simple(self, k4p):
        assert all(rs.is_simple_face(f) for f in rs.trace_faces(k4p))

    def test_long_walk_not_simple(self, k4f):
        big = max(rs.trace_faces(k4f), key=len)
        assert not rs.is_simple_face(big)

    def test_length_two_not_simple(self, single_edge):
        (face,) = rs.trace_faces(single_edge)
        assert not rs.is_simple_face(face)


class TestFaceIntersection:
    def test_one_edge(self, k4p):
        f1, f2 = faces_by_vertices(k4p, (0, 1, 2), (0, 3, 1))
        kind = rs.face_intersection(f1, f2)
        assert kind.tag is rs.IntersectionTag.ONE_EDGE
        assert kind.edge == (0, 1)
        assert kind.shared_vertices == {0, 1}

    def test_violation(self, k4f):
        small, big = sorted(rs.trace_faces(k4f), key=len)
        kind = rs.face_intersection(small, big)
        assert kind.tag is rs.IntersectionTag.VIOLATION
        assert kind.shared_vertices == {0, 1, 2}
        assert kind.shared_edges == {(0, 1), (1, 2), (0, 2)}

    def test_empty(self):
        g = rs.find_planar_embedding(rs.cube_graph())
        faces = rs.trace_faces(g)
        disjoint = [
            (f1, f2)
            for i, f1 in enumerate(faces)
            for f2 in faces[i + 1:]
            if not (f1.vertex_set & f2.vertex_set)
        ]
        assert disjoint
        kind = rs.face_intersection(*disjoint[0])
        assert kind.tag is rs.IntersectionTag.EMPTY

    def test_one_vertex(self):
        # in any plane bowtie embedding the two triangles are faces and
        # meet exactly in the cut vertex
        g = rs.find_planar_embedding(rs.bowtie_graph())
        t1, t2 = [f for f in rs.trace_faces(g) if len(f) == 3]
        kind = rs.face_intersection(t1, t2)
        assert kind.tag is rs.IntersectionTag.ONE_VERTEX
        assert kind.vertex == 2
        assert kind.shared_edges == frozenset()

    def test_same_face_rejected(self, k4p):
        f = rs.trace_faces(k4p)[0]
        with pytest.raises(SameFace):
            rs.face_intersection(f, f)


class TestCheckPolyhedral:
    def test_k4p(self, k4p):
        verdict = rs.check_polyhedral(k4p)
        assert verdict.polyhedral and verdict.violation is None

    def test_k4f_non_simple_face(self, k4f):
        verdict = rs.check_polyhedral(k4f)
        assert not verdict.polyhedral
        assert isinstance(verdict.violation, NonSimpleFace)
        assert len(verdict.violation.face) == 9

    def test_c4_bad_pair(self, c4_embedding):
        verdict = rs.check_polyhedral(c4_embedding)
        assert not verdict.polyhedral
        assert isinstance(verdict.violation, BadPair)
        assert verdict.violation.kind.shared_vertices == {0, 1, 2, 3}

    def test_violation_reproduces(self, c4_embedding, k4f):
        for g in (c4_embedding, k4f):
            verdict = rs.check_polyhedral(g)
            v = verdict.violation
            if isinstance(v, BadPair):
                faces = rs.trace_faces(g)
                i, j = v.faces
                assert rs.face_intersection(faces[i], faces[j]) == v.kind
            else:
                assert not rs.is_simple_face(v.face)

    def test_first_violation_is_canonical(self, k4f):
        faces = rs.trace_faces(k4f)
        bad = [f for f in faces if not rs.is_simple_face(f)]
        assert rs.check_polyhedral(k4f).violation.face == bad[0]


class TestDual:
    def test_k4p_dual_is_k4(self, k4p):
        dual = rs.build_dual(k4p)
        assert dual.num_vertices == 4
        assert dual.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
        assert dual.is_simple

    def test_k4f_dual(self, k4f):
        dual = rs.build_dual(k4f)
        assert dual.num_vertices == 2
        assert dual.loop_count == 3
        assert dual.parallel_edge_count == 3
        assert not dual.is_simple

    def test_single_edge_dual(self, single_edge):
        dual = rs.build_dual(single_edge)
        assert dual.num_vertices == 1
        assert dual.edges == ((0, 0),)
        assert not dual.is_simple

    def test_c4_dual_parallel(self, c4_embedding):
        assert not rs.dual_is_simple(c4_embedding)
        assert rs.build_dual(c4_embedding).parallel_edge_count == 4

    @given(embeddings)
    def test_dual_counts(self, g):
        dual = rs.build_dual(g)
        assert dual.num_vertices == len(rs.trace_faces(g))
        assert len(dual.edges) == g.edge_count


class TestCubicEquivalence:
    @pytest.mark.parametrize("graph", [rs.complete_graph(4), rs.prism_graph()])
    def test_exhaustive(self, graph):
        for g in rs.enumerate_rotations(graph):
            assert rs.dual_is_simple(g) == rs.check_polyhedral(g).polyhedral

    @given(cubic_embeddings)
    def test_random_cubic(self, g):
        assert rs.dual_is_simple(g) == rs.check_polyhedral(g).polyhedral


class TestMirrorInvariance:
    @given(embeddings)
    def test_polyhedral_bit(self, g):
        assert rs.check_polyhedral(g).polyhedral == rs.check_polyhedral(rs.mirror(g)).polyhedral

import random

import pytest
from hypothesis import given, strategies as st

import rotsys as rs
from rotsys.errors import BadVertexId, DuplicateNeighbor, LoopEdge, ParseError

from conftest import random_embedding


K4P_TEXT = "4 6\n0: 1 3 2\n1: 2 3 0\n2: 0 3 1\n3: 0 1 2\n"


class TestParseRotationFile:
    def test_k4p(self, k4p):
        assert rs.parse_rotation_file(K4P_TEXT) == k4p

    def test_single_edge(self, single_edge):
        assert rs.parse_rotation_file("2 1\n0: 1\n1: 0\n") == single_edge

    def test_bytes_input(self, k4p):
        assert rs.parse_rotation_file(K4P_TEXT.encode()) == k4p

    def test_comments_and_blank_lines(self, k4p):
        text = "# tetrahedron\n\n4 6\n0: 1 3 2\n# middle\n1: 2 3 0\n2: 0 3 1\n3: 0 1 2\n"
        assert rs.parse_rotation_file(text) == k4p

    def test_missing_lines(self):
        with pytest.raises(ParseError) as exc:
            rs.parse_rotation_file("4 6\n0: 1 3 2\n")
        assert exc.value.line == 2

    def test_empty(self):
        with pytest.raises(ParseError):
            rs.parse_rotation_file("")

    def test_bad_header(self):
        with pytest.raises(ParseError) as exc:
            rs.parse_rotation_file("4\n")
        assert exc.value.line == 1

    def test_duplicate_vertex_line(self):
        with pytest.raises(ParseError) as exc:
            rs.parse_rotation_file("2 1\n0: 1\n0: 1\n")
        assert exc.value.line == 3

    def test_extra_line(self):
        with pytest.raises(ParseError):
            rs.parse_rotation_file(K4P_TEXT + "4: 0\n")

    def test_degree_sum_mismatch(self):
        with pytest.raises(ParseError):
            rs.parse_rotation_file("2 2\n0: 1\n1: 0\n")

    def test_bad_label(self):
        with pytest.raises(ParseError):
            rs.parse_rotation_file("2 1\n0 1\n1: 0\n")

    def test_semantic_errors_carry_line(self):
        with pytest.raises(LoopEdge, match="line 2"):
            rs.parse_rotation_file("2 1\n0: 0\n1: 0\n")
        with pytest.raises(DuplicateNeighbor, match="line 2"):
            rs.parse_rotation_file("3 3\n0: 1 1\n1: 0\n2: 0\n")
        with pytest.raises(BadVertexId, match="line 3"):
            rs.parse_rotation_file("2 1\n0: 1\n1: 7\n")


class TestRoundTrip:
    def test_fixtures(self, k4p, k4f, single_edge, c4_embedding):
        for g in (k4p, k4f, single_edge, c4_embedding):
            assert rs.parse_rotation_file(rs.serialize_rotation_file(g)) == g

    @given(st.builds(lambda s: random_embedding(random.Random(s)), st.integers(0, 2**32 - 1)))
    def test_random(self, g):
        assert rs.parse_rotation_file(rs.serialize_rotation_file(g)) == g

    def test_serialized_form(self, k4p):
        assert rs.serialize_rotation_file(k4p) == K4P_TEXT


class TestParseGraph6:
    def test_k4(self):
        g = rs.parse_graph6("C~")
        assert g.n == 4
        assert g.edges == ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))

    def test_single_edge(self):
        g = rs.parse_graph6("A_")
        assert g.n == 2
        assert g.edges == ((0, 1),)

    def test_c4(self):
        g = rs.parse_graph6("Cl")
        assert g.n == 4
        assert g.edges == ((0, 1), (0, 3), (1, 2), (2, 3))

    def test_header_accepted(self):
        assert rs.parse_graph6(">>graph6<<C~").n == 4

    def test_empty(self):
        with pytest.raises(ParseError):
            rs.parse_graph6("")

    def test_bad_character(self):
        with pytest.raises(ParseError):
            rs.parse_graph6("C\x1f")

    def test_bad_length(self):
        with pytest.raises(ParseError):
            rs.parse_graph6("C~~")

    def test_petersen(self):
        # standard graph6 of the Petersen graph
        g = rs.parse_graph6("IheA@GUAo")
        assert g.n == 10
        assert g.m == 15
        assert g.is_cubic()
        petersen = rs.petersen_graph()
        assert rs.total_rotation_systems(g) == rs.total_rotation_systems(petersen)

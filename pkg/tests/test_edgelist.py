import pytest

from seymour_lab import parse_edge_list, serialize_edge_list
from seymour_lab.errors import ParseError


class TestParse:
    def test_basic(self):
        parsed = parse_edge_list("n 3\n0 1\n1 2\n2 0\n")
        assert parsed.digraph.n == 3
        assert sorted(parsed.digraph.arcs) == [(0, 1), (1, 2), (2, 0)]

    def test_comments_and_blanks(self):
        parsed = parse_edge_list("# triangle\n\nn 3\n0 1\n# middle\n1 2\n2 0\n")
        assert parsed.digraph.arc_count == 3

    def test_header_optional(self):
        parsed = parse_edge_list("0 1\n1 2\n")
        assert parsed.digraph.n == 3

    def test_header_adds_isolated_vertices(self):
        parsed = parse_edge_list("n 5\n0 1\n1 0\n")
        assert parsed.digraph.n == 5
        assert parsed.digraph.out_degree(4) == 0

    def test_arbitrary_labels_remapped(self):
        parsed = parse_edge_list("alpha beta\nbeta gamma\n")
        d = parsed.digraph
        assert d.n == 3
        # lexicographic: alpha -> 0, beta -> 1, gamma -> 2
        assert sorted(d.arcs) == [(0, 1), (1, 2)]
        assert parsed.label(0) == "alpha"
        assert parsed.label(2) == "gamma"

    def test_self_loop_rejected_with_line(self):
        with pytest.raises(ParseError) as exc:
            parse_edge_list("0 1\n0 0\n")
        assert exc.value.line_no == 2

    def test_duplicate_rejected(self):
        with pytest.raises(ParseError) as exc:
            parse_edge_list("0 1\n0 1\n")
        assert exc.value.line_no == 2

    def test_malformed_line(self):
        with pytest.raises(ParseError):
            parse_edge_list("0 1 2\n")

    def test_header_too_small(self):
        with pytest.raises(ParseError):
            parse_edge_list("n 2\n0 3\n")

    def test_gappy_integer_labels_keep_ids(self):
        parsed = parse_edge_list("0 5\n5 0\n")
        assert parsed.digraph.n == 6
        assert (0, 5) in parsed.digraph.arcs


class TestRoundTrip:
    def test_integer_labels(self):
        text = "n 5\n0 1\n0 3\n1 2\n2 0\n3 4\n4 0\n"
        parsed = parse_edge_list(text)
        assert serialize_edge_list(parsed.digraph, parsed.labels) == text

    def test_arbitrary_labels(self):
        first = parse_edge_list("x y\ny z\nz x\n")
        text = serialize_edge_list(first.digraph, first.labels)
        second = parse_edge_list(text)
        assert first.digraph == second.digraph

    def test_serialize_then_parse_is_stable(self):
        parsed = parse_edge_list("b a\na c\nc b\n")
        once = serialize_edge_list(parsed.digraph, parsed.labels)
        again = parse_edge_list(once)
        assert serialize_edge_list(again.digraph, again.labels) == once

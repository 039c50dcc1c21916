"""graph6, edge-list and DOT round-trips against an independent codec."""
from __future__ import annotations

import random
import string

import pytest

from oracles import g6_decode, g6_encode, random_edge_set
from twinwidth import (
    GraphFormatError,
    emit_dot,
    emit_edge_list,
    emit_graph6,
    enumerate_graphs,
    from_graph,
    parse_edge_list,
    parse_graph6,
)
from twinwidth.certificates import FIXTURE_NAMES  # noqa: F401  (fixture dir shared)
from test_trigraph import EX7_EDGES, ex7


class TestGraph6:
    def test_single_vertex(self):
        g = parse_graph6("@")
        assert g.n == 1 and list(g.edges()) == []
        assert emit_graph6(g) == "@"

    def test_single_edge(self):
        g = parse_graph6("A_")
        assert g.n == 2
        assert g.color_of([0], [1]) == "black"
        assert emit_graph6(g) == "A_"

    def test_two_isolated(self):
        g = parse_graph6("A?")
        assert g.n == 2 and list(g.edges()) == []

    def test_against_reference_codec(self):
        rng = random.Random(4)
        for _ in range(200):
            n = rng.randint(1, 12)
            edges = random_edge_set(n, rng)
            s = g6_encode(n, edges)
            g = parse_graph6(s)
            assert emit_graph6(g) == s
            n2, e2 = g6_decode(emit_graph6(g))
            assert n2 == n and e2 == edges

    def test_round_trip_all_small_classes(self):
        for n in range(1, 7):
            for g in enumerate_graphs(n):
                s = emit_graph6(g)
                assert all(63 <= ord(c) <= 126 for c in s)
                assert "\n" not in s
                h = parse_graph6(s)
                assert h.n == g.n and h.black == g.black

    def test_canonical_flag_is_relabeling_invariant(self):
        c4 = from_graph(4, [(0, 1), (1, 2), (2, 3), (3, 0)])
        relabeled = from_graph(4, [(2, 1), (1, 3), (3, 0), (0, 2)])
        assert emit_graph6(c4, canonical=True) == emit_graph6(relabeled, canonical=True)
        assert emit_graph6(c4) != emit_graph6(relabeled)

    def test_rejects_bad_bytes(self):
        for bad in ["", " ", "A ", "B\x1f?", "A\x7f"]:
            with pytest.raises(GraphFormatError):
                parse_graph6(bad)

    def test_rejects_wrong_payload_length(self):
        with pytest.raises(GraphFormatError):
            parse_graph6("A")  # n=2 needs one payload byte
        with pytest.raises(GraphFormatError):
            parse_graph6("A??")

    def test_rejects_zero_vertices(self):
        with pytest.raises(GraphFormatError):
            parse_graph6("?")

    def test_emit_rejects_red_edges(self):
        g = from_graph(3, [(0, 1), (1, 2)]).contract([0], [1])
        assert not g.is_plain()
        with pytest.raises(GraphFormatError):
            emit_graph6(g)

    def test_emit_rejects_oversized(self):
        g = from_graph(63, [])
        with pytest.raises(GraphFormatError):
            emit_graph6(g)

    def test_fuzz_never_crashes(self):
        rng = random.Random(11)
        alphabet = string.printable + "\x00\xff"
        for _ in range(3000):
            s = "".join(rng.choice(alphabet) for _ in range(rng.randint(0, 12)))
            try:
                parse_graph6(s)
            except GraphFormatError:
                pass


class TestEdgeList:
    def test_single_edge_doc(self):
        g = parse_edge_list("n 2\n0 1")
        assert g.n == 2 and g.color_of([0], [1]) == "black"

    def test_comments_and_blanks(self):
        g = parse_edge_list("# a triangle\n\nn 3\n0 1\n# middle\n1 2\n2 0\n")
        assert g.edge_count() == (3, 0)

    def test_bundled_case24_file(self):
        from importlib import resources

        text = resources.files("twinwidth").joinpath("fixtures/case24.edges").read_text()
        g = parse_edge_list(text)
        assert g.n == 6
        assert g.edge_count() == (10, 0)

    def test_round_trip(self):
        g = ex7()
        assert parse_edge_list(emit_edge_list(g)) == g

    @pytest.mark.parametrize(
        "doc",
        [
            "",  # no header
            "m 3\n0 1",  # wrong header keyword
            "n x\n0 1",  # non-integer count
            "n 0",  # empty graph
            "n 3\n0",  # short line
            "n 3\n0 1 2",  # long line
            "n 3\n0 a",  # non-integer index
            "n 3\n0 3",  # out of range
            "n 3\n1 1",  # self loop
            "n 3\n0 1\n1 0",  # duplicate
        ],
    )
    def test_rejects_malformed(self, doc):
        with pytest.raises(GraphFormatError):
            parse_edge_list(doc)


class TestDot:
    def test_red_edges_marked(self):
        h = ex7().contract([4], [5])
        dot = emit_dot(h)
        assert dot.count("color=red") == 2
        assert dot.count("style=bold") == 2
        assert dot.startswith("graph {")
        assert '"4+5" -- "6";' in dot

    def test_isolated_vertices_present(self):
        dot = emit_dot(from_graph(2, []))
        assert '"0";' in dot and '"1";' in dot

"""Exact solver: decision procedure, width computation, census."""
from __future__ import annotations

import random
from itertools import combinations

import pytest

from helpers import random_plain_graph
from twinwidth import (
    MemoTable,
    census_max_tww,
    complete,
    complete_bipartite,
    cycle,
    decide_tww,
    enumerate_graphs,
    from_graph,
    parse_graph6,
    path,
    twin_width,
    twin_width_oracle,
    verify_certificate,
)
from twinwidth.solver import SearchStats, _decide

CASE24_EDGES = [(0, 1), (0, 2), (0, 3), (0, 4), (0, 5), (1, 2), (1, 3), (2, 3), (3, 4), (4, 5)]


class TestDecide:
    def test_complete_five_at_zero(self):
        ok, cert = decide_tww(complete(5), 0)
        assert ok
        res = verify_certificate(cert)
        assert res.ok and res.observed_width == 0

    def test_six_cycle_needs_two(self):
        assert decide_tww(cycle(6), 1) == (False, None)
        ok, cert = decide_tww(cycle(6), 2)
        assert ok and verify_certificate(cert).ok

    def test_case24_graph_at_one(self):
        ok, cert = decide_tww(from_graph(6, CASE24_EDGES), 1)
        assert ok
        assert verify_certificate(cert).observed_width <= 1

    def test_negative_budget_rejected(self):
        with pytest.raises(ValueError):
            decide_tww(complete(3), -1)

    def test_budget_monotonicity_exhaustive(self):
        for n in range(1, 7):
            for g in enumerate_graphs(n):
                prev = False
                for d in range(4):
                    ok, _ = decide_tww(g, d)
                    assert ok or not prev  # once true, stays true
                    prev = prev or ok

    def test_trigraph_input_checks_its_own_red_degree(self):
        g = cycle(5).contract([0], [1])  # has a vertex of red degree 2
        assert g.max_red_degree() == 2
        stats = SearchStats()
        assert _decide(g, 1, MemoTable(), stats, {}) is None
        assert _decide(g, 2, MemoTable(), stats, {}) is not None


class TestTwinWidth:
    @pytest.mark.parametrize(
        "g,want",
        [
            (complete(6), 0),
            (complete_bipartite(3, 3), 0),
            (path(4), 1),
            (cycle(6), 2),
            (from_graph(1, []), 0),
        ],
        ids=["K6", "K33", "P4", "C6", "K1"],
    )
    def test_known_values(self, g, want):
        assert twin_width(g).twin_width == want

    def test_path_four_has_no_twins(self):
        # no pair of vertices shares a neighbourhood, so the width is not 0
        g = path(4)
        for a, b in combinations(range(4), 2):
            keep = ~((1 << a) | (1 << b))
            assert g.black[a] & keep != g.black[b] & keep
        assert twin_width(g).twin_width == 1

    def test_oracle_equivalence_small(self):
        for n in range(1, 5):
            for g in enumerate_graphs(n):
                assert twin_width(g).twin_width == twin_width_oracle(g)

    def test_certificates_verify_at_width(self):
        for g in enumerate_graphs(5):
            res = twin_width(g)
            assert res.certificate is not None
            assert res.certificate.width == res.twin_width
            check = verify_certificate(res.certificate)
            assert check.ok and check.observed_width == res.twin_width

    def test_generalized_input_flagged(self):
        g = cycle(6).contract([0], [1])
        res = twin_width(g)
        assert res.stats.generalized
        assert res.certificate is None
        assert res.twin_width == 2

    def test_structural_ceiling_recorded(self):
        res = twin_width(path(5))
        assert res.stats.structural_ceiling == 1

    def test_deterministic(self):
        g = parse_graph6("EhEG")  # C6
        a = twin_width(g)
        b = twin_width(g)
        assert a.certificate.steps == b.certificate.steps
        assert a.stats.states_expanded == b.stats.states_expanded
        assert a.stats.memo_hits == b.stats.memo_hits

    def test_memo_cap_does_not_change_answers(self):
        for g in enumerate_graphs(5, connected_only=True):
            assert twin_width(g, memo_cap=4).twin_width == twin_width(g).twin_width

    def test_induced_subgraph_monotone_sampled(self):
        rng = random.Random(5150)
        for _ in range(40):
            g = random_plain_graph(rng, 6)
            whole = twin_width(g).twin_width
            for drop in range(6):
                keep = [i for i in range(6) if i != drop]
                pos = {v: k for k, v in enumerate(keep)}
                edges = [
                    (pos[u[0]], pos[v[0]])
                    for u, v, _ in g.edges()
                    if u[0] != drop and v[0] != drop
                ]
                sub = from_graph(5, edges)
                assert twin_width(sub).twin_width <= whole

    def test_disjoint_union_is_max_of_parts(self):
        parts = [g for n in range(1, 5) for g in enumerate_graphs(n)]
        for g1 in parts:
            for g2 in parts:
                n1, n2 = g1.n, g2.n
                edges = [(u[0], v[0]) for u, v, _ in g1.edges()]
                edges += [(u[0] + n1, v[0] + n1) for u, v, _ in g2.edges()]
                union = from_graph(n1 + n2, edges)
                want = max(twin_width(g1).twin_width, twin_width(g2).twin_width)
                assert twin_width(union).twin_width == want


class TestCensus:
    def test_four_vertices(self):
        res = census_max_tww(4)
        assert res.classes == 11 and res.max_tww == 1
        assert res.ahko_holds

    def test_five_vertices(self):
        res = census_max_tww(5)
        assert res.classes == 34 and res.max_tww == 2

    def test_six_connected(self):
        res = census_max_tww(6, connected_only=True)
        assert res.classes == 112 and res.max_tww == 2
        assert res.ahko_holds and res.ahko_counterexample is None

    def test_records_sorted_and_certified(self):
        from twinwidth import canonical_form

        res = census_max_tww(5, connected_only=True)
        keys = [canonical_form(parse_graph6(r.graph6)) for r in res.records]
        assert keys == sorted(keys)
        for r in res.records:
            check = verify_certificate(r.certificate)
            assert check.ok and check.observed_width == r.twin_width

    def test_jobs_do_not_change_records(self):
        serial = census_max_tww(5, connected_only=True)
        parallel = census_max_tww(5, connected_only=True, jobs=2)
        assert [(r.graph6, r.twin_width, r.states_expanded) for r in serial.records] == [
            (r.graph6, r.twin_width, r.states_expanded) for r in parallel.records
        ]
        assert [r.certificate.steps for r in serial.records] == [
            r.certificate.steps for r in parallel.records
        ]

    def test_out_of_range(self):
        with pytest.raises(ValueError):
            census_max_tww(0)
        with pytest.raises(ValueError):
            census_max_tww(9)

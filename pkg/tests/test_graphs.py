from __future__ import annotations

import numpy as np
import pytest

from hcplab import (
    InfeasibleFamilyError,
    ParseError,
    SelfLoopError,
    VertexOutOfRangeError,
    brute_force_hcp,
    from_edge_list,
    gen_family,
    parse_graph,
    serialize_graph,
    validate,
)
from conftest import PENDANT9_EDGES, random_gnp


class TestFromEdgeList:
    def test_triangle(self):
        g = from_edge_list(3, [(1, 2), (2, 3), (1, 3)])
        assert g.degree_sequence() == (2, 2, 2)
        assert g.m == 3

    def test_pendant9_degrees(self, pendant9):
        assert pendant9.degree(2) == 5
        assert pendant9.degree(4) == 4
        assert pendant9.degree(7) == 1

    def test_duplicates_and_reversals_collapse(self):
        g = from_edge_list(3, [(1, 2), (2, 1), (1, 2), (2, 3)])
        assert g.edges == ((1, 2), (2, 3))

    def test_self_loop_rejected(self):
        with pytest.raises(SelfLoopError):
            from_edge_list(2, [(1, 1)])

    def test_out_of_range_rejected(self):
        with pytest.raises(VertexOutOfRangeError):
            from_edge_list(3, [(1, 4)])

    def test_adjacency_symmetric(self, pendant9):
        validate(pendant9)
        for v in range(1, 10):
            for u in pendant9.adj[v]:
                assert v in pendant9.adj_sets[u]


class TestGenerators:
    def test_complete(self):
        g = gen_family("complete", 4, 123)
        assert g.m == 6
        assert g.degree_sequence() == (3, 3, 3, 3)

    def test_cycle(self):
        g = gen_family("cycle", 5, 0)
        assert g.m == 5
        assert set(g.degree_sequence()) == {2}

    def test_planted_is_hamiltonian_with_expected_size(self):
        g = gen_family("planted", 8, 42, extra_edges=3)
        assert g.m == 11
        assert brute_force_hcp(g).found

    def test_planted_small_sweep_hamiltonian(self):
        for n in range(5, 11):
            for seed in range(4):
                g = gen_family("planted", n, seed, extra_edges=2)
                validate(g)
                assert brute_force_hcp(g).found, (n, seed)

    def test_bounded_respects_cap(self):
        samples = 0
        for n in range(5, 21):
            for seed in range(7):
                cap = 2 + seed % 4
                if cap > n - 1:
                    cap = n - 1
                g = gen_family("bounded", n, seed, max_degree=cap)
                validate(g)
                assert max(g.degree_sequence()) <= cap, (n, seed, cap)
                samples += 1
        assert samples >= 100

    def test_bounded_is_hamiltonian(self):
        for seed in range(5):
            g = gen_family("bounded", 8, seed, max_degree=3)
            assert brute_force_hcp(g).found

    def test_gnp_deterministic(self):
        a = gen_family("gnp", 12, 7, p=0.4)
        b = gen_family("gnp", 12, 7, p=0.4)
        assert a == b
        validate(a)

    def test_infeasible_params(self):
        with pytest.raises(InfeasibleFamilyError):
            gen_family("bounded", 8, 0, max_degree=1)
        with pytest.raises(InfeasibleFamilyError):
            gen_family("planted", 5, 0, extra_edges=100)
        with pytest.raises(InfeasibleFamilyError):
            gen_family("gnp", 5, 0, p=1.5)
        with pytest.raises(InfeasibleFamilyError):
            gen_family("complete", 2, 0)

    def test_generator_outputs_validate(self):
        cases = [
            gen_family("complete", 6, 0),
            gen_family("cycle", 9, 0),
            gen_family("gnp", 10, 3, p=0.3),
            gen_family("planted", 9, 5, extra_edges=4),
            gen_family("bounded", 12, 1, max_degree=4),
        ]
        for g in cases:
            validate(g)


class TestTextFormat:
    def test_parse_triangle(self):
        g = parse_graph("3 3\n1 2\n2 3\n1 3\n")
        assert g == from_edge_list(3, [(1, 2), (2, 3), (1, 3)])

    def test_serialize_canonical(self, k3):
        assert serialize_graph(k3) == "3 3\n1 2\n1 3\n2 3\n"

    def test_comments_and_missing_trailing_newline(self):
        g = parse_graph("# a comment\n3 2\n1 2\n# another\n2 3")
        assert g.edges == ((1, 2), (2, 3))

    def test_out_of_range_vertex(self):
        with pytest.raises(VertexOutOfRangeError):
            parse_graph("3 1\n1 4\n")

    def test_bad_header(self):
        with pytest.raises(ParseError) as ei:
            parse_graph("3\n1 2\n")
        assert ei.value.line == 1

    def test_wrong_edge_count(self):
        with pytest.raises(ParseError):
            parse_graph("3 2\n1 2\n")

    def test_round_trip_random(self):
        rng = np.random.default_rng(11)
        for _ in range(100):
            n = int(rng.integers(3, 15))
            g = random_gnp(n, float(rng.uniform(0.1, 0.9)), int(rng.integers(2**31)))
            assert parse_graph(serialize_graph(g)) == g

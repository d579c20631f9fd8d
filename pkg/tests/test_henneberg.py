"""Tests for Henneberg moves and Laman graph generation."""

from itertools import combinations

import networkx as nx
import pytest


def _graph(edges):
    from src.rigidity.laman import SimpleGraph

    return SimpleGraph.from_edges(edges)


TRIANGLE = [(0, 1), (0, 2), (1, 2)]


def _all_laman_up_to_isomorphism(n):
    """Exhaustive reference: every 2n - 3 edge subset of K_n, deduplicated by networkx."""
    from src.rigidity.laman import SimpleGraph, is_laman_bruteforce

    found = []
    for edges in combinations(combinations(range(n), 2), 2 * n - 3):
        g = SimpleGraph.from_edges(edges, vertices=range(n))
        if not is_laman_bruteforce(g):
            continue
        graph = g.to_networkx()
        if not any(nx.is_isomorphic(graph, other) for other in found):
            found.append(graph)
    return found


class TestMoves:
    def test_henneberg_one_adds_degree_two_vertex(self):
        from src.rigidity.henneberg import henneberg_one
        from src.rigidity.laman import is_laman

        g = henneberg_one(_graph(TRIANGLE), 0, 1)
        assert g.n_vertices == 4
        assert g.neighbors(3) == {0, 1}
        assert is_laman(g)

    def test_henneberg_two_subdivides_edge(self):
        from src.rigidity.henneberg import henneberg_two
        from src.rigidity.laman import is_laman

        g = henneberg_two(_graph(TRIANGLE), (1, 0), 2)
        assert (0, 1) not in g.edges
        assert g.neighbors(3) == {0, 1, 2}
        assert is_laman(g)

    def test_henneberg_one_rejects_bad_vertices(self):
        from src.rigidity.henneberg import henneberg_one
        from src.utils.errors import InputError

        with pytest.raises(InputError):
            henneberg_one(_graph(TRIANGLE), 0, 0)
        with pytest.raises(InputError):
            henneberg_one(_graph(TRIANGLE), 0, 9)

    def test_henneberg_two_rejects_bad_arguments(self):
        from src.rigidity.henneberg import henneberg_two
        from src.utils.errors import InputError

        g = _graph(TRIANGLE)
        with pytest.raises(InputError):
            henneberg_two(g, (0, 5), 1)
        with pytest.raises(InputError):
            henneberg_two(g, (0, 1), 1)

    def test_glue_on_edge_of_two_triangles_is_k4_minus_edge(self):
        from src.rigidity.henneberg import glue_on_edge

        g = glue_on_edge(_graph(TRIANGLE), (0, 1), _graph(TRIANGLE), (1, 2))
        k4e = nx.complete_graph(4)
        k4e.remove_edge(2, 3)
        assert g.n_vertices == 4
        assert nx.is_isomorphic(g.to_networkx(), k4e)

    def test_glue_rejects_non_edges(self):
        from src.rigidity.henneberg import glue_on_edge
        from src.utils.errors import InputError

        with pytest.raises(InputError):
            glue_on_edge(_graph(TRIANGLE), (0, 3), _graph(TRIANGLE), (0, 1))


class TestGenerate:
    @pytest.mark.parametrize("n, expected", [(3, 1), (4, 1), (5, 3), (6, 13)])
    def test_counts(self, n, expected):
        from src.rigidity.henneberg import generate_laman

        assert len(generate_laman(n)) == expected

    @pytest.mark.slow
    @pytest.mark.parametrize("n, expected", [(7, 70), (8, 608)])
    def test_counts_larger(self, n, expected):
        from src.rigidity.henneberg import generate_laman

        assert len(generate_laman(n)) == expected

    def test_three_vertices_is_the_triangle(self):
        from src.rigidity.henneberg import generate_laman

        (g,) = generate_laman(3)
        assert g.sorted_edges() == TRIANGLE

    @pytest.mark.parametrize("n", [4, 5])
    def test_matches_exhaustive_enumeration(self, n):
        from src.rigidity.henneberg import generate_laman

        generated = [g.to_networkx() for g in generate_laman(n)]
        reference = _all_laman_up_to_isomorphism(n)
        assert len(generated) == len(reference)
        for graph in reference:
            assert sum(nx.is_isomorphic(graph, other) for other in generated) == 1

    def test_output_is_laman_and_pairwise_non_isomorphic(self):
        from src.rigidity.henneberg import generate_laman
        from src.rigidity.laman import is_laman

        graphs = generate_laman(6)
        assert all(is_laman(g) for g in graphs)
        for a, b in combinations(graphs, 2):
            assert not nx.is_isomorphic(a.to_networkx(), b.to_networkx())

    def test_deterministic_order(self):
        from src.rigidity.henneberg import generate_laman, graph_key

        first = generate_laman(5)
        assert [g.sorted_edges() for g in first] == [g.sorted_edges() for g in generate_laman(5)]
        keys = [graph_key(g) for g in first]
        assert keys == sorted(keys)

    def test_parallel_matches_sequential(self):
        from src.rigidity.henneberg import generate_laman

        sequential = [g.sorted_edges() for g in generate_laman(6)]
        parallel = [g.sorted_edges() for g in generate_laman(6, jobs=2)]
        assert parallel == sequential

    def test_levels_hold_every_vertex_count(self):
        from src.rigidity.henneberg import generate_laman, generate_laman_levels

        levels = generate_laman_levels(6)
        assert {n: len(graphs) for n, graphs in levels.items()} == {3: 1, 4: 1, 5: 3, 6: 13}
        for n in (5, 6):
            assert [g.sorted_edges() for g in levels[n]] == [
                g.sorted_edges() for g in generate_laman(n)
            ]

    @pytest.mark.parametrize("n", [2, 10])
    def test_out_of_range(self, n):
        from src.rigidity.henneberg import generate_laman
        from src.utils.errors import InputError

        with pytest.raises(InputError):
            generate_laman(n)

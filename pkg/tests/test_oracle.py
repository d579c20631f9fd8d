"""Tests for the algebraic oracle."""

import logging
import random

import networkx as nx
import pytest

TRIANGLE = [(0, 1), (0, 2), (1, 2)]
K4_MINUS_EDGE = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)]


def _graph(edges):
    from src.rigidity.laman import SimpleGraph

    return SimpleGraph.from_edges(edges)


def test_triangle():
    from src.oracle.oracle import oracle_laman_number

    assert oracle_laman_number(_graph(TRIANGLE)) == 2


def test_k4_minus_edge():
    from src.oracle.oracle import oracle_laman_number

    assert oracle_laman_number(_graph(K4_MINUS_EDGE)) == 4


@pytest.mark.slow
def test_three_prism():
    from src.oracle.oracle import oracle_laman_number
    from src.rigidity.laman import SimpleGraph

    assert oracle_laman_number(SimpleGraph.from_networkx(nx.circular_ladder_graph(3))) == 24


def test_default_base_anchor():
    from src.oracle.oracle import default_base_anchor

    assert default_base_anchor(_graph([(3, 5), (3, 4), (4, 5)])) == (3, 4)


def test_count_does_not_depend_on_base_and_anchor():
    from src.oracle.field import Labeling, PrimeField
    from src.oracle.groebner import count_solutions
    from src.oracle.system import build_system

    g = _graph(K4_MINUS_EDGE)
    labeling = Labeling.random(g, PrimeField(), random.Random(9))
    for u, v in g.sorted_edges():
        assert count_solutions(build_system(g, labeling, base=u, anchor=v)) == 4
        assert count_solutions(build_system(g, labeling, base=v, anchor=u)) == 4


def test_relabeled_graph_gives_same_count():
    from src.oracle.oracle import oracle_laman_number

    relabeled = _graph(K4_MINUS_EDGE).relabel({0: 8, 1: 2, 2: 5, 3: 0})
    assert oracle_laman_number(relabeled, seed=3) == 4


def test_trial_count_is_deterministic():
    from src.oracle.field import DEFAULT_PRIME
    from src.oracle.oracle import trial_count

    g = _graph(K4_MINUS_EDGE)
    assert trial_count(g, DEFAULT_PRIME, 5, 0, 1) == trial_count(g, DEFAULT_PRIME, 5, 0, 1) == 4


def test_other_prime():
    from src.oracle.oracle import oracle_laman_number

    assert oracle_laman_number(_graph(K4_MINUS_EDGE), prime=1_048_583) == 4


def test_parallel_trials():
    from src.oracle.oracle import oracle_laman_number

    assert oracle_laman_number(_graph(K4_MINUS_EDGE), jobs=2) == 4


def test_rejects_non_laman():
    from src.oracle.oracle import oracle_laman_number
    from src.utils.errors import NotLamanError

    with pytest.raises(NotLamanError):
        oracle_laman_number(_graph(nx.complete_graph(4).edges()))


def test_rejects_large_graphs():
    from src.oracle.oracle import oracle_laman_number
    from src.utils.errors import InputError

    with pytest.raises(InputError):
        oracle_laman_number(_graph(K4_MINUS_EDGE), max_vertices=3)


def test_disagreeing_trials_are_inconclusive(monkeypatch, caplog):
    from src.oracle import oracle
    from src.utils.errors import OracleInconclusiveError

    calls = []

    def fake_trial(g, modulus, seed, attempt, trial, pair_budget):
        calls.append((attempt, trial))
        return 4 + trial

    monkeypatch.setattr(oracle, "trial_count", fake_trial)
    with caplog.at_level(logging.WARNING, logger="src.oracle.oracle"):
        with pytest.raises(OracleInconclusiveError):
            oracle.oracle_laman_number(_graph(K4_MINUS_EDGE), max_retries=2)
    assert calls == [(0, 0), (0, 1), (0, 2), (1, 0), (1, 1), (1, 2)]
    assert "disagree" in caplog.text


def test_retry_recovers_after_bad_draw(monkeypatch):
    from src.oracle import oracle

    def fake_trial(g, modulus, seed, attempt, trial, pair_budget):
        if attempt == 0 and trial == 1:
            return None
        return 4

    monkeypatch.setattr(oracle, "trial_count", fake_trial)
    assert oracle.oracle_laman_number(_graph(K4_MINUS_EDGE)) == 4


@pytest.mark.slow
@pytest.mark.parametrize("n", [3, 4, 5, 6])
def test_matches_recursion(n):
    from src.engine.recursion import LamanEngine
    from src.oracle.oracle import oracle_laman_number
    from src.rigidity.henneberg import generate_laman

    engine = LamanEngine()
    for g in generate_laman(n):
        assert oracle_laman_number(g) == engine.laman_number_graph(g).value

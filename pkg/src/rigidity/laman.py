"""Simple graphs and the Laman (generic rigidity) test."""

from collections.abc import Iterable, Mapping
from dataclasses import dataclass
from itertools import combinations

import networkx as nx

from src.utils.errors import InputError

BRUTEFORCE_MAX_VERTICES = 14


@dataclass(frozen=True)
class SimpleGraph:
    """Undirected graph without self-loops or parallel edges.

    Edges are stored as (u, v) with u < v.
    """

    vertices: frozenset[int]
    edges: frozenset[tuple[int, int]]

    def __post_init__(self) -> None:
        normalized = set()
        for u, v in self.edges:
            if u == v:
                raise InputError(f"Self-loop at vertex {u}")
            if u not in self.vertices or v not in self.vertices:
                raise InputError(f"Edge ({u}, {v}) references a vertex outside the graph")
            normalized.add((min(u, v), max(u, v)))
        object.__setattr__(self, "edges", frozenset(normalized))

    @classmethod
    def from_edges(cls, edges: Iterable[tuple[int, int]], vertices: Iterable[int] = ()) -> "SimpleGraph":
        edges = list(edges)
        vs = set(vertices)
        for u, v in edges:
            vs.update((u, v))
        return cls(frozenset(vs), frozenset(edges))

    @classmethod
    def from_networkx(cls, graph: nx.Graph) -> "SimpleGraph":
        return cls.from_edges(((int(u), int(v)) for u, v in graph.edges()), (int(v) for v in graph.nodes()))

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        graph.add_nodes_from(sorted(self.vertices))
        graph.add_edges_from(self.sorted_edges())
        return graph

    @property
    def n_vertices(self) -> int:
        return len(self.vertices)

    @property
    def n_edges(self) -> int:
        return len(self.edges)

    def sorted_edges(self) -> list[tuple[int, int]]:
        return sorted(self.edges)

    def neighbors(self, v: int) -> set[int]:
        return {b if a == v else a for a, b in self.edges if v in (a, b)}

    def relabel(self, mapping: Mapping[int, int]) -> "SimpleGraph":
        return SimpleGraph.from_edges(
            ((mapping[u], mapping[v]) for u, v in self.edges),
            (mapping[v] for v in self.vertices),
        )


class PebbleGame:
    """The (2,3)-pebble game: each vertex holds two pebbles, each accepted edge one."""

    def __init__(self, vertices: Iterable[int]):
        self._pebbles = {v: 2 for v in vertices}
        self._out: dict[int, list[int]] = {v: [] for v in self._pebbles}

    def _find_pebble(self, root: int, keep: int) -> bool:
        """Move one free pebble to `root` along a directed path avoiding `keep`."""
        parent: dict[int, int] = {root: root, keep: keep}
        stack = [root]
        while stack:
            x = stack.pop()
            for y in self._out[x]:
                if y in parent:
                    continue
                parent[y] = x
                if self._pebbles[y] > 0:
                    # reverse the path y <- ... <- root
                    self._pebbles[y] -= 1
                    self._pebbles[root] += 1
                    while y != root:
                        x = parent[y]
                        self._out[x].remove(y)
                        self._out[y].append(x)
                        y = x
                    return True
                stack.append(y)
        return False

    def add_edge(self, u: int, v: int) -> bool:
        """Try to insert the edge; False if it is dependent on the accepted ones."""
        while self._pebbles[u] < 2 and self._find_pebble(u, v):
            pass
        while self._pebbles[v] < 2 and self._find_pebble(v, u):
            pass
        if self._pebbles[u] + self._pebbles[v] < 4:
            return False
        self._pebbles[u] -= 1
        self._out[u].append(v)
        return True


def is_laman(g: SimpleGraph) -> bool:
    """|E| = 2|V| - 3 and every subgraph is (2,3)-sparse, decided by the pebble game."""
    if g.n_vertices < 2 or g.n_edges != 2 * g.n_vertices - 3:
        return False
    game = PebbleGame(g.vertices)
    return all(game.add_edge(u, v) for u, v in g.sorted_edges())


def is_laman_bruteforce(g: SimpleGraph) -> bool:
    """Same contract as is_laman, checked on every vertex subset of size >= 2."""
    n = g.n_vertices
    if n > BRUTEFORCE_MAX_VERTICES:
        raise InputError(f"Brute-force check supports at most {BRUTEFORCE_MAX_VERTICES} vertices, got {n}")
    if n < 2 or g.n_edges != 2 * n - 3:
        return False
    position = {v: i for i, v in enumerate(sorted(g.vertices))}
    masks = [(1 << position[u]) | (1 << position[v]) for u, v in g.edges]
    for size in range(2, n + 1):
        for subset in combinations(range(n), size):
            mask = sum(1 << i for i in subset)
            induced = sum(1 for e in masks if e & mask == e)
            if induced > 2 * size - 3:
                return False
    return True

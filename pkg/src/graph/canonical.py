"""Canonical keys for bigraphs.

A bigraph is encoded as one colored incidence structure: left vertices, right
vertices and biedges form three color classes, and each biedge node is linked
to its endpoints on both sides (a self-loop links twice). Iterated color
refinement with individualization then yields a canonical labeling; the key
is the lexicographically smallest certificate over the search tree.
"""

import hashlib
from dataclasses import dataclass

from src.graph.bigraph import Bigraph

LEFT, RIGHT, EDGE = 0, 1, 2
FULL_HEX_LENGTH = 2 * hashlib.blake2b().digest_size

Adjacency = list[list[tuple[int, int]]]
Certificate = tuple[tuple[int, tuple[tuple[int, int], ...]], ...]


@dataclass(frozen=True, order=True)
class CanonicalKey:
    """Isomorphism-complete fingerprint of a normalized bigraph."""

    data: bytes

    def hexdigest(self, length: int = 16) -> str:
        """Short printable fingerprint for reports and records."""
        return hashlib.blake2b(self.data, digest_size=length // 2).hexdigest()

    def __str__(self) -> str:
        return self.hexdigest()


def _incidence(b: Bigraph) -> tuple[list[int], Adjacency]:
    left = sorted(b.left.vertices)
    right = sorted(b.right.vertices)
    edges = sorted(b.biedges)
    index: dict[tuple[int, int], int] = {}
    for v in left:
        index[(LEFT, v)] = len(index)
    for v in right:
        index[(RIGHT, v)] = len(index)
    for e in edges:
        index[(EDGE, e)] = len(index)

    classes = [LEFT] * len(left) + [RIGHT] * len(right) + [EDGE] * len(edges)
    links: list[dict[int, int]] = [{} for _ in classes]

    def link(a: int, c: int) -> None:
        links[a][c] = links[a].get(c, 0) + 1
        links[c][a] = links[c].get(a, 0) + 1

    for side, graph in ((LEFT, b.left), (RIGHT, b.right)):
        for eid, u, v in graph.edges:
            node = index[(EDGE, eid)]
            link(node, index[(side, u)])
            link(node, index[(side, v)])

    adj = [sorted(d.items()) for d in links]
    return classes, adj


def _refine(colors: list[int], adj: Adjacency) -> list[int]:
    """Refine until the number of cells is stable; colors are renumbered canonically."""
    cells = -1
    while True:
        signatures = [
            (colors[i], tuple(sorted((colors[j], m) for j, m in adj[i])))
            for i in range(len(colors))
        ]
        ranking = {s: k for k, s in enumerate(sorted(set(signatures)))}
        colors = [ranking[s] for s in signatures]
        if len(ranking) == cells:
            return colors
        cells = len(ranking)


def _certificate(colors: list[int], classes: list[int], adj: Adjacency) -> Certificate:
    order = sorted(range(len(colors)), key=colors.__getitem__)
    return tuple(
        (classes[i], tuple(sorted((colors[j], m) for j, m in adj[i])))
        for i in order
    )


class _Search:
    """Individualization-refinement search with automorphism pruning.

    Two leaves with equal certificates give an automorphism. A child of a
    search node is skipped, or abandoned mid-subtree, once it lies in the
    orbit of an explored sibling under the known automorphisms that fix the
    node's individualized vertices.
    """

    def __init__(self, classes: list[int], adj: Adjacency):
        self.classes = classes
        self.adj = adj
        self.best: Certificate | None = None
        self.leaves: dict[Certificate, list[int]] = {}
        self.automorphisms: list[list[int]] = []
        self.prefix: list[int] = []
        self.explored: list[list[int]] = []
        self.unwind: int | None = None

    def run(self) -> Certificate:
        self._explore(list(self.classes))
        assert self.best is not None
        return self.best

    def _explore(self, colors: list[int]) -> None:
        depth = len(self.prefix)
        colors = _refine(colors, self.adj)
        members: dict[int, list[int]] = {}
        for i, c in enumerate(colors):
            members.setdefault(c, []).append(i)
        target = next((c for c in sorted(members) if len(members[c]) > 1), None)
        if target is None:
            self._leaf(colors)
            return

        self.explored.append([])
        try:
            for v in members[target]:
                if self._in_explored_orbit(v, self.explored[depth], self.prefix):
                    continue
                self.explored[depth].append(v)
                self.prefix.append(v)
                self._explore(
                    [2 * c + (1 if c == target and i != v else 0) for i, c in enumerate(colors)]
                )
                self.prefix.pop()
                if self.unwind is not None:
                    if self.unwind < depth:
                        return
                    self.unwind = None
        finally:
            self.explored.pop()

    def _leaf(self, colors: list[int]) -> None:
        order = sorted(range(len(colors)), key=colors.__getitem__)
        cert = _certificate(colors, self.classes, self.adj)
        if self.best is None or cert < self.best:
            self.best = cert
        seen = self.leaves.get(cert)
        if seen is None:
            self.leaves[cert] = order
            return

        gamma = [0] * len(order)
        for a, image in zip(seen, order):
            gamma[a] = image
        self.automorphisms.append(gamma)
        for d, v in enumerate(self.prefix):
            if self._in_explored_orbit(v, self.explored[d][:-1], self.prefix[:d]):
                self.unwind = d
                return

    def _in_explored_orbit(self, v: int, explored: list[int], fixed: list[int]) -> bool:
        if not explored:
            return False
        generators = [g for g in self.automorphisms if all(g[x] == x for x in fixed)]
        if not generators:
            return False
        orbit = {v}
        frontier = [v]
        while frontier:
            x = frontier.pop()
            for g in generators:
                y = g[x]
                if y not in orbit:
                    orbit.add(y)
                    frontier.append(y)
        return any(w in orbit for w in explored)


def canonical_key(b: Bigraph) -> CanonicalKey:
    """Canonical key of a normalized bigraph: equal keys iff isomorphic bigraphs."""
    classes, adj = _incidence(b)
    if not classes:
        return CanonicalKey(b"()")
    cert = _Search(classes, adj).run()
    counts = (classes.count(LEFT), classes.count(RIGHT), classes.count(EDGE))
    return CanonicalKey(repr((counts, cert)).encode("ascii"))

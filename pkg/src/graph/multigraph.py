"""Multigraphs with parallel edges and self-loops, plus the minor operations."""

from collections.abc import Iterable
from dataclasses import dataclass, field

from src.utils.errors import InputError


class UnionFind:
    """Union-find over arbitrary hashable vertex identifiers with path compression."""

    def __init__(self, elements: Iterable[int] = ()):
        self._parent: dict[int, int] = {v: v for v in elements}

    def add(self, v: int) -> None:
        if v not in self._parent:
            self._parent[v] = v

    def find(self, v: int) -> int:
        root = v
        while self._parent[root] != root:
            root = self._parent[root]
        # compress
        while self._parent[v] != root:
            self._parent[v], v = root, self._parent[v]
        return root

    def union(self, a: int, b: int) -> bool:
        """Merge the classes of a and b.

        Returns:
            True if two different classes were merged.
        """
        ra = self.find(a)
        rb = self.find(b)
        if ra == rb:
            return False
        # smallest member stays the root so class names are reproducible
        if rb < ra:
            ra, rb = rb, ra
        self._parent[rb] = ra
        return True

    def components(self) -> int:
        return sum(1 for v, p in self._parent.items() if v == p)


@dataclass(frozen=True)
class Multigraph:
    """Undirected multigraph.

    `edges` holds (edge_id, u, v) triples sorted by edge id; u == v is a self-loop
    and distinct ids may share endpoints.
    """

    vertices: frozenset[int]
    edges: tuple[tuple[int, int, int], ...]
    _index: dict[int, tuple[int, int]] = field(
        init=False, repr=False, compare=False, hash=False
    )

    def __post_init__(self) -> None:
        edges = tuple(sorted(self.edges))
        object.__setattr__(self, "edges", edges)
        index: dict[int, tuple[int, int]] = {}
        for eid, u, v in edges:
            if eid in index:
                raise InputError(f"Duplicate edge id {eid}")
            if u not in self.vertices or v not in self.vertices:
                raise InputError(f"Edge {eid} references a vertex outside the graph")
            index[eid] = (u, v)
        object.__setattr__(self, "_index", index)

    @classmethod
    def from_edges(
        cls, edges: Iterable[tuple[int, int, int]], vertices: Iterable[int] = ()
    ) -> "Multigraph":
        """Build a multigraph whose vertex set is the given vertices plus all endpoints."""
        edges = tuple(edges)
        vs = set(vertices)
        for _, u, v in edges:
            vs.add(u)
            vs.add(v)
        return cls(frozenset(vs), edges)

    @property
    def edge_ids(self) -> frozenset[int]:
        return frozenset(self._index)

    def endpoints(self, eid: int) -> tuple[int, int]:
        try:
            return self._index[eid]
        except KeyError:
            raise InputError(f"Unknown edge id {eid}") from None

    def degree(self, v: int) -> int:
        return sum((u == v) + (w == v) for _, u, w in self.edges)

    def has_self_loop(self) -> bool:
        return any(u == v for _, u, v in self.edges)

    def _check_subset(self, es: Iterable[int]) -> frozenset[int]:
        es = frozenset(es)
        unknown = es - self._index.keys()
        if unknown:
            raise InputError(f"Unknown edge ids {sorted(unknown)}")
        return es


def rank(g: Multigraph, es: Iterable[int]) -> int:
    """Dimension of the subgraph determined by the edge set `es`."""
    uf = UnionFind()
    merged = 0
    for eid in es:
        u, v = g.endpoints(eid)
        uf.add(u)
        uf.add(v)
        merged += uf.union(u, v)
    return merged


def dim(g: Multigraph) -> int:
    """|V| minus the number of connected components (isolated vertices included)."""
    return rank(g, g.edge_ids)


def quotient(g: Multigraph, es: Iterable[int]) -> Multigraph:
    """Contract the edges `es`; each class is named by its smallest member."""
    es = g._check_subset(es)
    uf = UnionFind(g.vertices)
    for eid in es:
        uf.union(*g.endpoints(eid))
    return Multigraph(
        frozenset(uf.find(v) for v in g.vertices),
        tuple((eid, uf.find(u), uf.find(v)) for eid, u, v in g.edges if eid not in es),
    )


def complement(g: Multigraph, es: Iterable[int]) -> Multigraph:
    """Delete the edges `es` and keep only vertices incident to a remaining edge."""
    es = g._check_subset(es)
    remaining = tuple(e for e in g.edges if e[0] not in es)
    return Multigraph.from_edges(remaining)

"""Bigraphs: two multigraphs sharing one set of biedges."""

from collections.abc import Iterable
from dataclasses import dataclass
from typing import TYPE_CHECKING

from src.graph.multigraph import Multigraph, complement, dim, quotient
from src.utils.errors import InputError

if TYPE_CHECKING:
    from src.rigidity.laman import SimpleGraph


@dataclass(frozen=True)
class Bigraph:
    """A pair (left, right) of multigraphs over the same edge ids.

    Vertex ids of the two sides live in separate namespaces.
    """

    left: Multigraph
    right: Multigraph

    def __post_init__(self) -> None:
        if self.left.edge_ids != self.right.edge_ids:
            raise InputError("Left and right graphs must carry the same biedges")

    @property
    def biedges(self) -> frozenset[int]:
        return self.left.edge_ids

    def __len__(self) -> int:
        return len(self.left.edges)

    @classmethod
    def from_graph(cls, g: "SimpleGraph") -> "Bigraph":
        """The bigraph (G, G); biedge i is the i-th edge of g in sorted order."""
        edges = tuple((i, u, v) for i, (u, v) in enumerate(g.sorted_edges()))
        side = Multigraph(frozenset(g.vertices), edges)
        return cls(side, side)

    def swap(self) -> "Bigraph":
        return Bigraph(self.right, self.left)

    def has_self_loop(self) -> bool:
        return self.left.has_self_loop() or self.right.has_self_loop()

    def is_single_edge(self) -> bool:
        """Both sides are one edge joining two different vertices."""
        if len(self) != 1:
            return False
        (_, a, b), (_, c, d) = self.left.edges[0], self.right.edges[0]
        return a != b and c != d


def _check(b: Bigraph, m: Iterable[int]) -> frozenset[int]:
    m = frozenset(m)
    unknown = m - b.biedges
    if unknown:
        raise InputError(f"Unknown biedges {sorted(unknown)}")
    return m


def left_quot(b: Bigraph, m: Iterable[int]) -> Bigraph:
    """(G / M, H \\ M) over the biedges not in M."""
    m = _check(b, m)
    return Bigraph(quotient(b.left, m), complement(b.right, m))


def right_quot(b: Bigraph, m: Iterable[int]) -> Bigraph:
    """(G \\ M, H / M) over the biedges not in M."""
    m = _check(b, m)
    return Bigraph(complement(b.left, m), quotient(b.right, m))


def is_pseudo_laman(b: Bigraph) -> bool:
    return dim(b.left) + dim(b.right) == len(b) + 1


def _drop_isolated(g: Multigraph) -> Multigraph:
    used = {u for _, u, _ in g.edges} | {v for _, _, v in g.edges}
    if len(used) == len(g.vertices):
        return g
    return Multigraph(frozenset(used), g.edges)


def normalize(b: Bigraph) -> Bigraph:
    """Remove vertices incident to no edge on either side."""
    left = _drop_isolated(b.left)
    right = _drop_isolated(b.right)
    if left is b.left and right is b.right:
        return b
    return Bigraph(left, right)

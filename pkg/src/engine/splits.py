"""Enumeration of the (M, N) splits indexing the product terms of the recursion."""

from dataclasses import dataclass

from src.engine.stats import RecursionStats
from src.graph.bigraph import Bigraph
from src.graph.multigraph import Multigraph, dim
from src.utils.errors import InputError


@dataclass(frozen=True)
class Split:
    """M and N cover all biedges and share exactly the pivot."""

    m: frozenset[int]
    n: frozenset[int]
    pivot: int

    def __post_init__(self) -> None:
        if self.m & self.n != {self.pivot}:
            raise InputError("M and N must intersect exactly in the pivot")
        if len(self.m) < 2 or len(self.n) < 2:
            raise InputError("M and N need at least two biedges each")


def _find(parent: list[int], x: int) -> int:
    while parent[x] != x:
        x = parent[x]
    return x


def _join(parent: list[int], a: int, b: int) -> bool:
    ra, rb = _find(parent, a), _find(parent, b)
    if ra == rb:
        return False
    parent[rb] = ra
    return True


def _indexed(g: Multigraph) -> tuple[int, dict[int, tuple[int, int]]]:
    position = {v: i for i, v in enumerate(sorted(g.vertices))}
    return len(position), {eid: (position[u], position[v]) for eid, u, v in g.edges}


def enumerate_splits(
    b: Bigraph, pivot: int, stats: RecursionStats | None = None
) -> list[Split]:
    """All splits around `pivot` for which ^M B and B^N are pseudo-Laman.

    Every non-pivot biedge goes to exactly one of M, N. The walk tracks

        f1 = dim(G / M) + dim(H \\ M) - |N|
        f2 = dim(G \\ N) + dim(H / N) - |M|

    through union-finds of G[M], G[M - e], H[N] and H[N - e]. Assigning one
    more biedge lowers each f by 0 or 1, so a prefix is abandoned once an f
    is negative or exceeds the number of unassigned biedges. Results are in
    increasing order of the membership bitmask (bit i set when the i-th
    non-pivot biedge, by id, lies in M).
    """
    if pivot not in b.biedges:
        raise InputError(f"Pivot {pivot} is not a biedge")

    others = sorted(b.biedges - {pivot})
    k = len(others)
    n_left, left = _indexed(b.left)
    n_right, right = _indexed(b.right)
    dim_g = dim(b.left)
    dim_h = dim(b.right)
    found: list[tuple[int, Split]] = []
    visited = 0

    def walk(
        i: int,
        gm: list[int], gm0: list[int], hn: list[int], hn0: list[int],
        r_gm: int, r_gm0: int, r_hn: int, r_hn0: int,
        size_m: int, size_n: int, mask: int,
    ) -> None:
        nonlocal visited
        visited += 1
        f1 = dim_g - r_gm + r_hn0 - size_n
        f2 = r_gm0 + dim_h - r_hn - size_m
        remaining = k - i
        if f1 < 0 or f2 < 0 or f1 > remaining or f2 > remaining:
            return
        if i == k:
            if size_m >= 2 and size_n >= 2:
                m = frozenset([pivot] + [e for j, e in enumerate(others) if mask >> j & 1])
                n = frozenset([pivot] + [e for j, e in enumerate(others) if not mask >> j & 1])
                found.append((mask, Split(m, n, pivot)))
            return

        eid = others[i]
        lu, lv = left[eid]
        ru, rv = right[eid]

        # eid in N
        hn_next, hn0_next = hn[:], hn0[:]
        walk(
            i + 1, gm, gm0, hn_next, hn0_next,
            r_gm, r_gm0, r_hn + _join(hn_next, ru, rv), r_hn0 + _join(hn0_next, ru, rv),
            size_m, size_n + 1, mask,
        )
        # eid in M
        gm_next, gm0_next = gm[:], gm0[:]
        walk(
            i + 1, gm_next, gm0_next, hn, hn0,
            r_gm + _join(gm_next, lu, lv), r_gm0 + _join(gm0_next, lu, lv), r_hn, r_hn0,
            size_m + 1, size_n, mask | (1 << i),
        )

    gm = list(range(n_left))
    hn = list(range(n_right))
    r_gm = _join(gm, *left[pivot])
    r_hn = _join(hn, *right[pivot])
    walk(0, gm, list(range(n_left)), hn, list(range(n_right)), r_gm, 0, r_hn, 0, 1, 1, 0)

    if stats is not None:
        stats.splits_enumerated += visited
        stats.splits_surviving += len(found)
    found.sort(key=lambda item: item[0])
    return [split for _, split in found]

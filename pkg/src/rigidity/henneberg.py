"""Henneberg constructions and generation of all Laman graphs of a given size."""

import logging
from collections.abc import Iterator
from concurrent.futures import ProcessPoolExecutor
from itertools import combinations

from src.graph.bigraph import Bigraph
from src.graph.canonical import CanonicalKey, canonical_key
from src.rigidity.laman import SimpleGraph, is_laman
from src.utils.errors import InputError, LamanError

logger = logging.getLogger(__name__)

MIN_GENERATE_VERTICES = 3
MAX_GENERATE_VERTICES = 9


def _fresh_vertex(g: SimpleGraph) -> int:
    return max(g.vertices, default=-1) + 1


def henneberg_one(g: SimpleGraph, u: int, v: int) -> SimpleGraph:
    """Type I: add a new vertex joined to the two existing vertices u and v."""
    if u == v or u not in g.vertices or v not in g.vertices:
        raise InputError(f"Henneberg I needs two distinct vertices of the graph, got {u}, {v}")
    w = _fresh_vertex(g)
    return SimpleGraph.from_edges(list(g.edges) + [(u, w), (v, w)], g.vertices)


def henneberg_two(g: SimpleGraph, edge: tuple[int, int], w: int) -> SimpleGraph:
    """Type II: subdivide edge {u, v} by a new vertex that is also joined to w."""
    u, v = min(edge), max(edge)
    if (u, v) not in g.edges:
        raise InputError(f"Henneberg II needs an edge of the graph, got {edge}")
    if w in (u, v) or w not in g.vertices:
        raise InputError(f"Henneberg II needs a third vertex distinct from {u}, {v}")
    x = _fresh_vertex(g)
    edges = [e for e in g.edges if e != (u, v)] + [(u, x), (v, x), (w, x)]
    return SimpleGraph.from_edges(edges, g.vertices)


def glue_on_edge(
    g1: SimpleGraph, e1: tuple[int, int], g2: SimpleGraph, e2: tuple[int, int]
) -> SimpleGraph:
    """Union of g1 and a copy of g2 identified along e1 ~ e2 (endpoints in order)."""
    if (min(e1), max(e1)) not in g1.edges or (min(e2), max(e2)) not in g2.edges:
        raise InputError("Gluing edges must belong to their graphs")
    mapping = {e2[0]: e1[0], e2[1]: e1[1]}
    nxt = _fresh_vertex(g1)
    for v in sorted(g2.vertices - set(e2)):
        mapping[v] = nxt
        nxt += 1
    copy = g2.relabel(mapping)
    return SimpleGraph.from_edges(g1.edges | copy.edges, g1.vertices | copy.vertices)


def extensions(g: SimpleGraph) -> Iterator[SimpleGraph]:
    """All graphs reachable from g by one Henneberg move."""
    vertices = sorted(g.vertices)
    for u, v in combinations(vertices, 2):
        yield henneberg_one(g, u, v)
    for edge in g.sorted_edges():
        for w in vertices:
            if w not in edge:
                yield henneberg_two(g, edge, w)


def graph_key(g: SimpleGraph) -> CanonicalKey:
    """Isomorphism-invariant key of a simple graph, via the bigraph (g, g)."""
    return canonical_key(Bigraph.from_graph(g))


def _merge(target: dict[CanonicalKey, SimpleGraph], key: CanonicalKey, g: SimpleGraph) -> None:
    current = target.get(key)
    if current is None or g.sorted_edges() < current.sorted_edges():
        target[key] = g


def _children(g: SimpleGraph) -> dict[CanonicalKey, SimpleGraph]:
    found: dict[CanonicalKey, SimpleGraph] = {}
    for child in extensions(g):
        _merge(found, graph_key(child), child)
    return found


def generate_laman_levels(
    n: int, jobs: int = 1, max_vertices: int = MAX_GENERATE_VERTICES
) -> dict[int, list[SimpleGraph]]:
    """Laman graphs up to isomorphism on 3..n vertices, one key-sorted list per count.

    Args:
        n: Vertex count.
        jobs: Worker processes used to expand parents (1 = in-process).
        max_vertices: Upper bound accepted for n.
    """
    if not MIN_GENERATE_VERTICES <= n <= max_vertices:
        raise InputError(f"n must be between {MIN_GENERATE_VERTICES} and {max_vertices}, got {n}")

    levels: dict[int, list[SimpleGraph]] = {}
    level = {graph_key(g): g for g in [SimpleGraph.from_edges([(0, 1)])]}
    for size in range(3, n + 1):
        parents = [level[k] for k in sorted(level)]
        merged: dict[CanonicalKey, SimpleGraph] = {}
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                batches = list(pool.map(_children, parents, chunksize=8))
        else:
            batches = [_children(g) for g in parents]
        for batch in batches:
            for key, g in batch.items():
                _merge(merged, key, g)
        for g in merged.values():
            if not is_laman(g):
                raise LamanError(f"Henneberg move produced a non-Laman graph: {g.sorted_edges()}")
        logger.debug(f"Generated {len(merged)} Laman graphs on {size} vertices")
        level = merged
        levels[size] = [level[k] for k in sorted(level)]

    return levels


def generate_laman(
    n: int, jobs: int = 1, max_vertices: int = MAX_GENERATE_VERTICES
) -> list[SimpleGraph]:
    """All Laman graphs on exactly n vertices up to isomorphism, sorted by key."""
    return generate_laman_levels(n, jobs, max_vertices)[n]

"""The memoized bigraph recursion for Laman numbers."""

import logging
import time
from concurrent.futures import ProcessPoolExecutor
from typing import Literal

from src.engine.cache import MemoCache
from src.engine.counts import ONE, ZERO, LamanCount
from src.engine.splits import enumerate_splits
from src.engine.stats import RecursionStats
from src.graph.bigraph import Bigraph, is_pseudo_laman, left_quot, normalize, right_quot
from src.graph.canonical import CanonicalKey, canonical_key
from src.rigidity.laman import SimpleGraph, is_laman
from src.utils.errors import InputError, NotLamanError, NotPseudoLamanError, PivotDisagreementError

logger = logging.getLogger(__name__)

PivotStrategy = Literal["default", "first"]
PIVOT_STRATEGIES = ("default", "first", "all")


def choose_pivot(b: Bigraph, strategy: PivotStrategy = "default") -> int:
    """Pick the pivot biedge.

    "default" takes the smallest biedge at a maximum-degree left vertex,
    "first" the smallest biedge id. Any choice yields the same count.
    """
    if not b.biedges:
        raise InputError("Cannot choose a pivot in a bigraph without biedges")
    if strategy == "first":
        return min(b.biedges)
    if strategy != "default":
        raise InputError(f"Unknown pivot strategy {strategy!r}")
    vertex = min(b.left.vertices, key=lambda v: (-b.left.degree(v), v))
    return min(eid for eid, u, v in b.left.edges if vertex in (u, v))


def _has_twin_biedges(b: Bigraph) -> bool:
    """Two biedges with the same endpoints on both sides: inconsistent for generic labels."""
    seen = set()
    for (eid, a, c), (_, x, y) in zip(b.left.edges, b.right.edges):
        shape = (min(a, c), max(a, c), min(x, y), max(x, y))
        if shape in seen:
            return True
        seen.add(shape)
    return False


class LamanEngine:
    """Evaluates Lam(B) with a canonical-key memo cache.

    Every recursive call normalizes its bigraph first; the self-loop, single
    edge and twin-biedge cases are answered before the cache is consulted.
    """

    def __init__(
        self,
        cache: MemoCache | None = None,
        pivot_strategy: PivotStrategy = "default",
        early_zero: bool = True,
        jobs: int = 1,
        trace: bool = False,
    ):
        if pivot_strategy not in ("default", "first"):
            raise InputError(f"Unknown pivot strategy {pivot_strategy!r}")
        self.cache = cache if cache is not None else MemoCache()
        self.pivot_strategy = pivot_strategy
        self.early_zero = early_zero
        self.jobs = jobs
        self.stats = RecursionStats()
        self.trace: list[Bigraph] | None = [] if trace else None
        self._exact: dict[Bigraph, LamanCount] = {}

    def clear(self) -> None:
        """Forget cached values and counters."""
        self.cache.clear()
        self._exact.clear()
        self.stats = RecursionStats()
        if self.trace is not None:
            self.trace.clear()

    def choose_pivot(self, b: Bigraph) -> int:
        return choose_pivot(b, self.pivot_strategy)

    def _prepare(self, b: Bigraph) -> Bigraph:
        b = normalize(b)
        if not is_pseudo_laman(b):
            raise NotPseudoLamanError(
                f"Bigraph with {len(b)} biedges is not pseudo-Laman"
            )
        return b

    def laman_number(self, b: Bigraph, pivot: int | None = None) -> LamanCount:
        """Lam(B) for a bigraph that is pseudo-Laman after normalization.

        Args:
            b: The bigraph.
            pivot: Pivot for the top-level expansion; default follows the strategy.
        """
        b = self._prepare(b)
        if pivot is not None and pivot not in b.biedges:
            raise InputError(f"Pivot {pivot} is not a biedge")
        start = time.perf_counter()
        if self.jobs > 1:
            value = self._count_parallel(b, pivot)
        else:
            value = self._count(b, pivot)
        self.stats.wall_time += time.perf_counter() - start
        logger.debug(f"Lam = {value} for {len(b)} biedges; stats {self.stats.counters()}")
        return value

    def laman_number_graph(self, g: SimpleGraph) -> LamanCount:
        """Laman number of a Laman graph, computed on the bigraph (G, G)."""
        if not is_laman(g):
            raise NotLamanError(
                f"Graph with {g.n_vertices} vertices and {g.n_edges} edges is not Laman"
            )
        return self.laman_number(Bigraph.from_graph(g))

    def laman_number_all_pivots(self, b: Bigraph) -> dict[int, LamanCount]:
        """Expand the top level once per biedge and require every count to agree."""
        b = self._prepare(b)
        start = time.perf_counter()
        results: dict[int, LamanCount] = {}
        for pivot in sorted(b.biedges):
            base = self._base_case(b)
            results[pivot] = base if base is not None else self._expand(b, pivot)
        self.stats.wall_time += time.perf_counter() - start
        if len(set(results.values())) > 1:
            summary = ", ".join(f"{p}: {v}" for p, v in results.items())
            raise PivotDisagreementError(f"Pivot choices disagree ({summary})")
        return results

    def _base_case(self, b: Bigraph) -> LamanCount | None:
        if b.has_self_loop():
            return ZERO
        if b.is_single_edge():
            return ONE
        if self.early_zero and _has_twin_biedges(b):
            return ZERO
        return None

    def _count(self, b: Bigraph, pivot: int | None = None) -> LamanCount:
        """Lam of a normalized pseudo-Laman bigraph."""
        self.stats.nodes += 1
        base = self._base_case(b)
        if base is not None:
            return base

        known = self._exact.get(b)
        if known is not None:
            self.stats.cache_hits += 1
            return known
        key = canonical_key(b)
        known = self.cache.get(key)
        if known is not None:
            self.stats.cache_hits += 1
            self._exact[b] = known
            return known

        if self.trace is not None:
            self.trace.append(b)
        value = self._expand(b, pivot if pivot is not None else self.choose_pivot(b))
        self.cache.put(key, value)
        self._exact[b] = value
        return value

    def _unary_terms(self, b: Bigraph, pivot: int) -> list[Bigraph]:
        terms = []
        for sub in (left_quot(b, {pivot}), right_quot(b, {pivot})):
            sub = normalize(sub)
            if is_pseudo_laman(sub):
                terms.append(sub)
            else:
                # contributes 0
                self.stats.unary_dropped += 1
                logger.debug(f"Dropped non-pseudo-Laman unary term at pivot {pivot} ({len(sub)} biedges)")
        return terms

    def _expand(self, b: Bigraph, pivot: int) -> LamanCount:
        total = ZERO
        for sub in self._unary_terms(b, pivot):
            total += self._count(sub)
        for split in enumerate_splits(b, pivot, self.stats):
            first = self._count(normalize(left_quot(b, split.m)))
            if first:
                total += first * self._count(normalize(right_quot(b, split.n)))
        return total

    def _count_parallel(self, b: Bigraph, pivot: int | None) -> LamanCount:
        """Evaluate the distinct top-level subproblems in worker processes."""
        self.stats.nodes += 1
        base = self._base_case(b)
        if base is not None:
            return base
        key = canonical_key(b)
        known = self.cache.get(key)
        if known is not None:
            self.stats.cache_hits += 1
            return known

        pivot = pivot if pivot is not None else self.choose_pivot(b)
        unary = self._unary_terms(b, pivot)
        pairs = [
            (normalize(left_quot(b, s.m)), normalize(right_quot(b, s.n)))
            for s in enumerate_splits(b, pivot, self.stats)
        ]
        distinct: dict[CanonicalKey, Bigraph] = {}
        for sub in unary + [x for pair in pairs for x in pair]:
            distinct.setdefault(canonical_key(sub), sub)

        values: dict[CanonicalKey, LamanCount] = {}
        with ProcessPoolExecutor(max_workers=self.jobs) as pool:
            futures = {
                k: pool.submit(_solve, sub, self.pivot_strategy, self.early_zero)
                for k, sub in distinct.items()
            }
            for k in sorted(futures):
                value, items, stats = futures[k].result()
                values[k] = value
                self.cache.update(items)
                self.stats.merge(stats)

        total = ZERO
        for sub in unary:
            total += values[canonical_key(sub)]
        for left, right in pairs:
            total += values[canonical_key(left)] * values[canonical_key(right)]
        self.cache.put(key, total)
        return total


def _solve(
    b: Bigraph, pivot_strategy: PivotStrategy, early_zero: bool
) -> tuple[LamanCount, list[tuple[CanonicalKey, LamanCount]], RecursionStats]:
    engine = LamanEngine(pivot_strategy=pivot_strategy, early_zero=early_zero)
    value = engine._count(b)
    return value, engine.cache.items(), engine.stats


def laman_number(b: Bigraph, cache: MemoCache | None = None) -> LamanCount:
    """Lam(B) with the default engine options, reusing `cache` when given."""
    return LamanEngine(cache=cache).laman_number(b)


def laman_number_graph(g: SimpleGraph, cache: MemoCache | None = None) -> LamanCount:
    return LamanEngine(cache=cache).laman_number_graph(g)

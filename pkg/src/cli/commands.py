"""Handlers for the check, count, oracle, generate and bench subcommands."""

import argparse
import csv
import logging
import sys
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from pathlib import Path
from typing import TextIO

import psutil

from src.cli.parser import format_edge_list, parse_edge_list, parse_graph6
from src.cli.records import RunRecord, RunRecordStore, record_key
from src.config import AppConfig
from src.engine.counts import LamanCount, reflection_classes
from src.engine.recursion import LamanEngine
from src.graph.bigraph import Bigraph
from src.oracle.oracle import oracle_laman_number
from src.rigidity.henneberg import generate_laman, generate_laman_levels, graph_key
from src.rigidity.laman import SimpleGraph, is_laman
from src.utils.errors import InputError, NotLamanError
from src.utils.formatting import format_bytes, format_ms, format_stats

logger = logging.getLogger(__name__)

CSV_COLUMNS = ["key", "n_vertices", "n_edges", "laman_number", "elapsed_ms"]


@dataclass
class CommandContext:
    config: AppConfig
    out: TextIO


def resolve_jobs(jobs: int | None, default: int) -> int:
    """0 means one worker per physical core."""
    jobs = default if jobs is None else jobs
    if jobs < 0:
        raise InputError(f"--jobs must be nonnegative, got {jobs}")
    if jobs == 0:
        return psutil.cpu_count(logical=False) or 1
    return jobs


def read_graph(args: argparse.Namespace) -> SimpleGraph:
    """Read the input file (or stdin for "-") as an edge list or graph6."""
    if args.file == "-":
        text = sys.stdin.read()
    else:
        text = Path(args.file).read_text(encoding="utf-8")
    return parse_graph6(text) if args.graph6 else parse_edge_list(text)


def _require_laman(g: SimpleGraph) -> None:
    if not is_laman(g):
        raise NotLamanError(f"Graph with {g.n_vertices} vertices and {g.n_edges} edges is not Laman")


def check_command(args: argparse.Namespace, ctx: CommandContext) -> None:
    g = read_graph(args)
    verdict = "Laman" if is_laman(g) else "not Laman"
    ctx.out.write(f"{verdict}\n")


def count_command(args: argparse.Namespace, ctx: CommandContext) -> None:
    engine_config = ctx.config.engine
    strategy = args.pivot_strategy or engine_config.pivot_strategy
    g = read_graph(args)
    _require_laman(g)

    canonical = graph_key(g)
    key = record_key(canonical)
    store = None if args.no_record else RunRecordStore(args.records or ctx.config.records_path)
    if store is not None and not args.no_reuse and strategy != "all":
        known = store.lookup(key)
        if known is not None:
            logger.info(f"Reusing recorded Laman number for {canonical}")
            ctx.out.write(f"{known}\n")
            _write_reflections(ctx.out, known, g.n_vertices)
            ctx.out.write("stats: reused record\n")
            return

    engine = LamanEngine(
        pivot_strategy="first" if strategy == "first" else "default",
        early_zero=engine_config.early_zero and not args.no_early_zero,
        jobs=resolve_jobs(args.jobs, engine_config.jobs),
    )
    logger.info(f"Counting {g.n_vertices} vertices, {g.n_edges} edges (key {canonical})")
    if strategy == "all":
        per_pivot = engine.laman_number_all_pivots(Bigraph.from_graph(g))
        value = next(iter(per_pivot.values()))
    else:
        value = engine.laman_number_graph(g)
    logger.info(f"Laman number {value} for {canonical}: {format_stats(engine.stats)}")

    ctx.out.write(f"{value}\n")
    _write_reflections(ctx.out, value.value, g.n_vertices)
    if strategy == "all":
        ctx.out.write(f"pivots agree: {len(per_pivot)}\n")
    ctx.out.write(f"stats: {format_stats(engine.stats)}\n")

    if store is not None:
        store.append(
            RunRecord(
                key=key,
                n_vertices=g.n_vertices,
                n_edges=g.n_edges,
                laman_number=value.value,
                stats=engine.stats.to_dict(),
            )
        )


def _write_reflections(out: TextIO, value: int, n_vertices: int) -> None:
    classes = reflection_classes(LamanCount(value), n_vertices)
    if classes is not None:
        out.write(f"up to reflection: {classes}\n")


def oracle_command(args: argparse.Namespace, ctx: CommandContext) -> None:
    oracle_config = ctx.config.oracle
    g = read_graph(args)
    value = oracle_laman_number(
        g,
        seed=oracle_config.seed if args.seed is None else args.seed,
        prime=oracle_config.prime if args.prime is None else args.prime,
        trials=oracle_config.trials,
        max_retries=oracle_config.max_retries,
        pair_budget=oracle_config.pair_budget,
        max_vertices=oracle_config.max_vertices,
        jobs=resolve_jobs(args.jobs, 1),
    )
    ctx.out.write(f"{value}\n")


def generate_command(args: argparse.Namespace, ctx: CommandContext) -> None:
    graphs = generate_laman(
        args.n,
        jobs=resolve_jobs(args.jobs, 1),
        max_vertices=ctx.config.generate.max_vertices,
    )
    logger.info(f"Generated {len(graphs)} Laman graphs on {args.n} vertices")

    if args.output:
        directory = Path(args.output)
        directory.mkdir(parents=True, exist_ok=True)
        for index, g in enumerate(graphs):
            header = f"laman n={args.n} index={index} key={graph_key(g).hexdigest()}"
            (directory / f"laman_{args.n}_{index}.txt").write_text(format_edge_list(g, header))
        ctx.out.write(f"{len(graphs)}\n")
        return

    blocks = [
        format_edge_list(g, f"laman n={args.n} index={i} key={graph_key(g).hexdigest()}")
        for i, g in enumerate(graphs)
    ]
    ctx.out.write("\n".join(blocks))


_worker_engine: LamanEngine | None = None


def _init_bench_worker(pivot_strategy: str, early_zero: bool) -> None:
    global _worker_engine
    _worker_engine = LamanEngine(pivot_strategy=pivot_strategy, early_zero=early_zero)  # type: ignore[arg-type]


def _bench_one(g: SimpleGraph) -> tuple[int, float]:
    assert _worker_engine is not None
    start = time.perf_counter()
    value = _worker_engine.laman_number_graph(g)
    return value.value, time.perf_counter() - start


def bench_command(args: argparse.Namespace, ctx: CommandContext) -> None:
    engine_config = ctx.config.engine
    max_vertices = args.max_vertices or ctx.config.bench.max_vertices
    strategy = "first" if args.pivot_strategy == "first" else "default"
    early_zero = engine_config.early_zero and not args.no_early_zero
    jobs = resolve_jobs(args.jobs, engine_config.jobs)

    levels = generate_laman_levels(
        max_vertices,
        jobs=jobs,
        max_vertices=max(max_vertices, ctx.config.generate.max_vertices),
    )
    graphs = [g for n in sorted(levels) for g in levels[n]]
    logger.info(f"Benchmarking {len(graphs)} Laman graphs with 3..{max_vertices} vertices")

    start = time.perf_counter()
    if jobs > 1:
        with ProcessPoolExecutor(
            max_workers=jobs, initializer=_init_bench_worker, initargs=(strategy, early_zero)
        ) as pool:
            results = list(pool.map(_bench_one, graphs, chunksize=4))
    else:
        _init_bench_worker(strategy, early_zero)
        results = [_bench_one(g) for g in graphs]
    total = time.perf_counter() - start

    rows = [
        [graph_key(g).hexdigest(), g.n_vertices, g.n_edges, value, format_ms(elapsed)]
        for g, (value, elapsed) in zip(graphs, results)
    ]
    if args.format == "csv":
        writer = csv.writer(ctx.out, lineterminator="\n")
        writer.writerow(CSV_COLUMNS)
        writer.writerows(rows)
    else:
        for row in rows:
            ctx.out.write(f"{row[0]}  n={row[1]:<3} m={row[2]:<3} lam={row[3]:<10} {row[4]}ms\n")

    rss = psutil.Process().memory_info().rss
    logger.info(f"Bench finished: {len(rows)} graphs in {total:.2f}s, memory {format_bytes(rss)}")

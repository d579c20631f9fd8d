"""Algebraic cross-check of Laman numbers by counting solutions over a prime field."""

import logging
import random
from concurrent.futures import ProcessPoolExecutor

from src.oracle.field import DEFAULT_PRIME, Labeling, PrimeField
from src.oracle.groebner import DEFAULT_PAIR_BUDGET, count_solutions
from src.oracle.system import build_system
from src.rigidity.laman import SimpleGraph, is_laman
from src.utils.errors import InputError, NotLamanError, OracleInconclusiveError

logger = logging.getLogger(__name__)

ORACLE_MAX_VERTICES = 7


def default_base_anchor(g: SimpleGraph) -> tuple[int, int]:
    """Smallest vertex and its smallest neighbour."""
    base = min(g.vertices)
    return base, min(g.neighbors(base))


def trial_count(
    g: SimpleGraph,
    modulus: int,
    seed: int,
    attempt: int,
    trial: int,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
) -> int | None:
    """Solution count for the labeling drawn from (seed, attempt, trial)."""
    field = PrimeField(modulus)
    rng = random.Random(f"{seed}:{attempt}:{trial}")
    labeling = Labeling.random(g, field, rng)
    base, anchor = default_base_anchor(g)
    return count_solutions(build_system(g, labeling, base, anchor), pair_budget)


def oracle_laman_number(
    g: SimpleGraph,
    seed: int = 0,
    prime: int = DEFAULT_PRIME,
    trials: int = 3,
    max_retries: int = 5,
    pair_budget: int = DEFAULT_PAIR_BUDGET,
    max_vertices: int = ORACLE_MAX_VERTICES,
    jobs: int = 1,
) -> int:
    """Count realizations by solving the system for random labels.

    Each attempt draws `trials` independent labelings; the count is accepted
    only when all of them agree.

    Raises:
        NotLamanError: g is not a Laman graph.
        InputError: g has more than `max_vertices` vertices.
        OracleInconclusiveError: no attempt produced agreeing counts.
    """
    if not is_laman(g):
        raise NotLamanError(f"Graph with {g.n_vertices} vertices and {g.n_edges} edges is not Laman")
    if g.n_vertices > max_vertices:
        raise InputError(f"Oracle supports at most {max_vertices} vertices, got {g.n_vertices}")
    PrimeField(prime)

    for attempt in range(max_retries):
        args = [(g, prime, seed, attempt, t, pair_budget) for t in range(trials)]
        if jobs > 1:
            with ProcessPoolExecutor(max_workers=jobs) as pool:
                counts = list(pool.map(trial_count, *zip(*args)))
        else:
            counts = [trial_count(*a) for a in args]

        if counts[0] is not None and all(c == counts[0] for c in counts):
            logger.debug(f"Oracle agreed on {counts[0]} at attempt {attempt}")
            return counts[0]
        logger.warning(f"Oracle trials disagree at attempt {attempt}: {counts}; redrawing labels")

    raise OracleInconclusiveError(f"No agreement after {max_retries} attempts of {trials} trials")

"""Buchberger's algorithm over a prime field and solution counting.

Polynomials are sympy ring elements with dense exponent tuples in
graded reverse lexicographic order.
"""

import logging

from sympy.polys.rings import PolyElement

from src.oracle.system import PolySystem
from src.utils.errors import OracleBudgetError

logger = logging.getLogger(__name__)

DEFAULT_PAIR_BUDGET = 50_000

Monomial = tuple[int, ...]


def _spoly(p: PolyElement, q: PolyElement) -> PolyElement:
    R = p.ring
    lcm = R.monomial_lcm(p.LM, q.LM)
    return p.mul_monom(R.monomial_div(lcm, p.LM)) - q.mul_monom(R.monomial_div(lcm, q.LM))


def _interreduce(polys: list[PolyElement]) -> list[PolyElement]:
    current = [p.monic() for p in polys if p]
    while True:
        reduced = []
        for i, p in enumerate(current):
            r = p.rem(current[:i])
            if r:
                reduced.append(r.monic())
        if reduced == current:
            return current
        current = reduced


def groebner_basis(system: PolySystem, pair_budget: int = DEFAULT_PAIR_BUDGET) -> list[PolyElement]:
    """Reduced Groebner basis of the system's ideal.

    Pairs are selected by the normal strategy (smallest lcm of leading
    monomials first) and filtered with the product and chain criteria in the
    Gebauer-Moeller update.

    Raises:
        OracleBudgetError: more than `pair_budget` pairs were reduced.
    """
    R = system.ring
    order = R.order
    lcm = R.monomial_lcm
    div = R.monomial_div
    mul = R.monomial_mul

    f = _interreduce(list(system.polynomials))
    if not f:
        return []

    def update(basis: set[int], pairs: set[tuple[int, int]], ih: int) -> tuple[set[int], set[tuple[int, int]]]:
        mh = f[ih].LM

        candidates = set(basis)
        kept: set[tuple[int, int]] = set()
        while candidates:
            ig = candidates.pop()
            m = lcm(mh, f[ig].LM)

            def divides(ip: int) -> bool:
                return div(m, lcm(mh, f[ip].LM)) is not None

            if mul(mh, f[ig].LM) == m or (
                not any(divides(ip) for ip in candidates)
                and not any(divides(pair[1]) for pair in kept)
            ):
                kept.add((ih, ig))
        # product criterion: coprime leading monomials reduce to zero
        new_pairs = {(ih, ig) for ih, ig in kept if mul(mh, f[ig].LM) != lcm(mh, f[ig].LM)}

        survivors = set()
        for i1, i2 in pairs:
            m12 = lcm(f[i1].LM, f[i2].LM)
            if (
                div(m12, mh) is None
                or lcm(f[i1].LM, mh) == m12
                or lcm(f[i2].LM, mh) == m12
            ):
                survivors.add((i1, i2))

        basis = {ig for ig in basis if div(f[ig].LM, mh) is None}
        basis.add(ih)
        return basis, survivors | new_pairs

    basis: set[int] = set()
    pairs: set[tuple[int, int]] = set()
    for ih in sorted(range(len(f)), key=lambda i: order(f[i].LM)):
        basis, pairs = update(basis, pairs, ih)

    reduced_pairs = 0
    zero_reductions = 0
    while pairs:
        reduced_pairs += 1
        if reduced_pairs > pair_budget:
            raise OracleBudgetError(f"Groebner basis needed more than {pair_budget} pair reductions")
        pair = min(pairs, key=lambda p: (order(lcm(f[p[0]].LM, f[p[1]].LM)), p))
        pairs.remove(pair)
        divisors = [f[i] for i in sorted(basis, key=lambda i: order(f[i].LM))]
        h = _spoly(f[pair[0]], f[pair[1]]).rem(divisors)
        if not h:
            zero_reductions += 1
            continue
        f.append(h.monic())
        basis, pairs = update(basis, pairs, len(f) - 1)

    logger.debug(
        f"Buchberger: {reduced_pairs} pairs reduced, {zero_reductions} to zero, "
        f"{len(basis)} basis elements"
    )

    result = []
    for ig in sorted(basis):
        r = f[ig].rem([f[j] for j in basis if j != ig])
        if r:
            result.append(r.monic())
    return sorted(result, key=lambda p: order(p.LM), reverse=True)


def standard_monomials(basis: list[PolyElement], nvars: int) -> list[Monomial] | None:
    """Monomials outside the leading-term ideal, or None if there are infinitely many."""
    leading = [p.LM for p in basis]
    if any(not any(m) for m in leading):
        return []
    for i in range(nvars):
        if not any(m[i] > 0 and sum(m) == m[i] for m in leading):
            return None

    def standard(m: Monomial) -> bool:
        return not any(all(a >= b for a, b in zip(m, lm)) for lm in leading)

    start = (0,) * nvars
    found = [start]
    seen = {start}
    for m in found:
        for i in range(nvars):
            nxt = m[:i] + (m[i] + 1,) + m[i + 1:]
            if nxt not in seen and standard(nxt):
                seen.add(nxt)
                found.append(nxt)
    return sorted(found)


def count_solutions(system: PolySystem, pair_budget: int = DEFAULT_PAIR_BUDGET) -> int | None:
    """Vector-space dimension of the quotient ring, or None if not zero-dimensional.

    For generic labels this is the number of solutions over the algebraic
    closure, counted with multiplicity.
    """
    basis = groebner_basis(system, pair_budget)
    monomials = standard_monomials(basis, len(system.variables))
    return None if monomials is None else len(monomials)

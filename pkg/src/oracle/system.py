"""The normalized bilinear realization system.

In the coordinates x -> x + iy, y -> x - iy the squared-distance equations
become (x_u - x_v)(y_u - y_v) = λ_uv; rotations act as (x, y) -> (t x, y / t).
Putting `base` at the origin removes translations and x_anchor = 1 removes
the scaling, which is legitimate because λ(base, anchor) != 0 forces
x_anchor != 0.
"""

from dataclasses import dataclass

from sympy.polys.orderings import grevlex
from sympy.polys.rings import PolyElement, PolyRing, ring

from src.oracle.field import Labeling
from src.rigidity.laman import SimpleGraph
from src.utils.errors import InputError


@dataclass(frozen=True)
class PolySystem:
    ring: PolyRing
    polynomials: tuple[PolyElement, ...]

    @property
    def variables(self) -> tuple[str, ...]:
        return tuple(str(s) for s in self.ring.symbols)

    def is_square(self) -> bool:
        return len(self.polynomials) == len(self.variables)


def build_system(g: SimpleGraph, lam: Labeling, base: int, anchor: int) -> PolySystem:
    """One equation (x_u - x_v)(y_u - y_v) - λ_uv per edge of g."""
    if (min(base, anchor), max(base, anchor)) not in g.edges:
        raise InputError(f"Base {base} and anchor {anchor} must span an edge")

    names: list[str] = []
    for v in sorted(g.vertices):
        if v == base:
            continue
        if v != anchor:
            names.append(f"x{v}")
        names.append(f"y{v}")

    R, *gens = ring(names, lam.field.domain, grevlex)
    variable = dict(zip(names, gens))
    x = {v: variable.get(f"x{v}") for v in g.vertices}
    y = {v: variable.get(f"y{v}") for v in g.vertices}
    x[base], y[base] = R.zero, R.zero
    x[anchor] = R.one

    polys = tuple(
        (x[u] - x[v]) * (y[u] - y[v]) - R(lam[(u, v)]) for u, v in g.sorted_edges()
    )
    return PolySystem(R, polys)

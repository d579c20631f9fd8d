"""Prime fields standing in for generic complex parameters."""

import random
from collections.abc import Mapping
from dataclasses import dataclass
from functools import cached_property

from sympy import isprime
from sympy.polys.domains import GF
from sympy.polys.domains.finitefield import FiniteField

from src.rigidity.laman import SimpleGraph
from src.utils.errors import InputError

# largest prime below 2^31, so products of residues fit in 64 bits
DEFAULT_PRIME = 2_147_483_647
MIN_PRIME = 2**20


@dataclass(frozen=True)
class PrimeField:
    modulus: int = DEFAULT_PRIME

    def __post_init__(self) -> None:
        if self.modulus <= MIN_PRIME or not isprime(self.modulus):
            raise InputError(f"Field modulus must be a prime above 2^20, got {self.modulus}")

    @cached_property
    def domain(self) -> FiniteField:
        return GF(self.modulus)

    def element(self, value: int):
        """The residue of `value` as a field element."""
        return self.domain(value)

    def random_nonzero(self, rng: random.Random) -> int:
        return rng.randrange(1, self.modulus)


@dataclass(frozen=True)
class Labeling:
    """Nonzero field labels λ_uv for the edges of a graph."""

    field: PrimeField
    labels: Mapping[tuple[int, int], int]

    def __post_init__(self) -> None:
        for edge, value in self.labels.items():
            if value % self.field.modulus == 0:
                raise InputError(f"Label of edge {edge} must be nonzero")

    @classmethod
    def random(cls, g: SimpleGraph, field: PrimeField, rng: random.Random) -> "Labeling":
        return cls(field, {e: field.random_nonzero(rng) for e in g.sorted_edges()})

    def __getitem__(self, edge: tuple[int, int]) -> int:
        u, v = edge
        return self.labels[(min(u, v), max(u, v))]

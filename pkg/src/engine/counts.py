"""Laman counts held in checked unsigned 64-bit arithmetic."""

from dataclasses import dataclass

from src.utils.errors import InputError, LamanOverflowError

UINT64_MAX = 2**64 - 1


@dataclass(frozen=True, order=True)
class LamanCount:
    value: int = 0

    def __post_init__(self) -> None:
        if self.value < 0:
            raise InputError(f"Laman counts are nonnegative, got {self.value}")
        if self.value > UINT64_MAX:
            raise LamanOverflowError(f"{self.value} does not fit in 64 bits")

    def __add__(self, other: "LamanCount") -> "LamanCount":
        total = self.value + other.value
        if total > UINT64_MAX:
            raise LamanOverflowError(f"{self.value} + {other.value} overflows 64 bits")
        return LamanCount(total)

    def __mul__(self, other: "LamanCount") -> "LamanCount":
        product = self.value * other.value
        if product > UINT64_MAX:
            raise LamanOverflowError(f"{self.value} * {other.value} overflows 64 bits")
        return LamanCount(product)

    def __int__(self) -> int:
        return self.value

    def __bool__(self) -> bool:
        return self.value != 0

    def __str__(self) -> str:
        return str(self.value)


ZERO = LamanCount(0)
ONE = LamanCount(1)


def reflection_classes(count: LamanCount, n_vertices: int) -> int | None:
    """Realizations up to all isometries; reflections pair up generic realizations.

    Returns None where the pairing does not apply (fewer than three vertices).
    """
    if n_vertices < 3:
        return None
    return count.value // 2

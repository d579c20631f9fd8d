"""Shared formatting utility functions."""

from src.engine.stats import RecursionStats


def format_bytes(bytes_val: int) -> str:
    """Format bytes as human-readable string.

    Args:
        bytes_val: Number of bytes.

    Returns:
        Human-readable string like "1.5GB" or "500MB".
    """
    gb = bytes_val / (1024**3)
    if gb >= 1.0:
        return f"{gb:.1f}GB"
    mb = bytes_val / (1024**2)
    return f"{mb:.0f}MB"


def format_ms(seconds: float) -> str:
    """Seconds as milliseconds with three decimals, e.g. "12.500"."""
    return f"{seconds * 1000:.3f}"


def format_stats(stats: RecursionStats) -> str:
    """One-line summary such as "nodes=12 cache_hits=3 ... elapsed=1.234ms"."""
    counters = " ".join(f"{name}={value}" for name, value in stats.counters().items())
    return f"{counters} elapsed={format_ms(stats.wall_time)}ms"

"""Laman property checks and Henneberg generation."""

from src.rigidity.laman import SimpleGraph, is_laman

__all__ = ["SimpleGraph", "is_laman"]

"""Memoized recursion for Laman numbers."""

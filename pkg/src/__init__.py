"""Laman numbers of generically rigid graphs via the bigraph recursion."""

__version__ = "0.1.0"

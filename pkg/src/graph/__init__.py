"""Multigraphs, bigraphs and their canonical keys."""

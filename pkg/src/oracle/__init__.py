"""Algebraic solution-counting oracle over prime fields."""

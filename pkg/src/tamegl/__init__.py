"""Exact verification of the rank-one tame Langlands dictionary on P^1 with three marked points."""

__version__ = "0.1.0"

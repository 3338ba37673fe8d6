"""Exact q-deformed rationals, braid actions and related combinatorics."""

__version__ = "0.1.0"

"""Exact computations with extended zigzag Schur algebras and their tilting modules."""

__version__ = "0.1.0"

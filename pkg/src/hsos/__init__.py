"""Exact computer algebra for Hermitian sums of squares."""

__version__ = "0.1.0"

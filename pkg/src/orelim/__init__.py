"""Exact noncommutative Gaussian elimination, LU factors and Jacobi identities."""

__version__ = "0.1.0"

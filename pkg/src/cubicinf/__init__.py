"""Singularities at infinity of cubic polynomials C^3 -> C, in exact arithmetic."""

__version__ = "0.1.0"

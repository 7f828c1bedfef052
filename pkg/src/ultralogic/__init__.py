"""Finite consequence operators, deduction engines and their order theory."""

__version__ = "0.1.0"

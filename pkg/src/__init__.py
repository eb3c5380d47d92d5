"""Biharmonic Dirichlet problem on the unit disk: solver and verification harness."""

__version__ = "0.1.0"

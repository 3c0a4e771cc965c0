"""Exact invariants and Euler characteristics for corank-1 map-germ images."""

__version__ = "0.1.0"

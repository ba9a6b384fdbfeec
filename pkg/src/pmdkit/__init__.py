"""Positive matching decompositions of graphs and their Cartesian products."""

__version__ = "0.1.0"

"""Constructive 4-edge-coloring for graphs of maximum degree 4 whose core has
maximum degree at most 2."""

__version__ = "0.1.0"

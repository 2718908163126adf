"""Valuated Δ-matroids, regular subdivisions of the cube and principal minors over valued fields."""

__version__ = "0.1.0"

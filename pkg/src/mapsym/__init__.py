"""Symmetry type graphs of maps given as flag systems."""

__version__ = "0.1.0"

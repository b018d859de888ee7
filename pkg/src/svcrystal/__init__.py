"""Crystals on set-valued tableaux, Grothendieck and Lascoux polynomials, and related models."""

__version__ = "0.1.0"

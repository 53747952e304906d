"""Exact-arithmetic constructions and verifications of congruent numbers."""

__version__ = "0.1.0"

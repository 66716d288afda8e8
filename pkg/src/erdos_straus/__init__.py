"""Erdős–Straus decompositions, their Pythagorean triples and Bézout families."""

__version__ = "0.1.0"

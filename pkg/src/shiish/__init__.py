"""Deleted Shi and Ish hyperplane arrangements: exact regions, labels and
characteristic polynomials."""

__version__ = "0.1.0"

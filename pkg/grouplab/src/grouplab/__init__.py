"""Desk-scale laboratory for orbital and double coset growth."""

__version__ = "0.1.0"

"""Codes that correct deletions and insertions of zeros."""

__version__ = "0.1.0"

"""Orderable groups toolkit: orderings, decision procedures, and knot-group verdicts."""

__version__ = "0.1.0"
